"""The twenty commutator identities tying the twelve root elements around a
line together, parameterized by a square i of F7*.

Subscripts scale with i (indices are taken mod 7 in F7*), so the i = 2 and
i = 4 batteries are the conjugates of the i = 1 battery under the order-3
rotation of the star, which is how they are proved.  Generators of the star
are written L (capital) and the outer hexagon generators l (lowercase).
"""

from __future__ import annotations

# each relation: ([x, y], rhs) asserting comm(x, y) = product(rhs);
# a generator reference is (kind, c) meaning index c*i mod 7, and rhs factors
# carry an exponent.  c = 6, 5, 3 encode -1, -2, -4 mod 7.
RELATIONS = (
    ((("L", 1), ("L", 3)), ()),
    ((("L", 1), ("L", 2)), ((("L", 3), 4),)),
    ((("l", 1), ("l", 3)), ((("L", 2), 1),)),
    ((("l", 1), ("l", 2)), ((("L", 2), 1), (("l", 3), 3), (("L", 6), 3))),
    ((("L", 1), ("l", 1)), ()),
    ((("L", 1), ("l", 3)), ((("l", 5), 3), (("L", 3), 1), (("l", 1), 2), (("L", 2), 4))),
    ((("L", 1), ("l", 2)), ((("l", 4), 2), (("L", 5), 1), (("l", 6), 2), (("L", 4), 1))),
    ((("L", 1), ("l", 6)), ()),
    ((("L", 1), ("l", 4)), ()),
    ((("L", 1), ("l", 5)), ()),
    ((("L", 6), ("L", 4)), ()),
    ((("L", 6), ("L", 5)), ((("L", 4), 3),)),
    ((("l", 6), ("l", 4)), ((("L", 5), 2),)),
    ((("l", 6), ("l", 5)), ((("L", 5), 2), (("l", 4), 3), (("L", 1), 4))),
    ((("L", 6), ("l", 6)), ()),
    ((("L", 6), ("l", 4)), ((("l", 2), 4), (("L", 4), 2), (("l", 6), 1), (("L", 5), 4))),
    ((("L", 6), ("l", 5)), ((("l", 3), 1), (("L", 2), 2), (("l", 1), 1), (("L", 3), 1))),
    ((("L", 6), ("l", 1)), ()),
    ((("L", 6), ("l", 3)), ()),
    ((("L", 6), ("l", 2)), ()),
)

CONVENTIONS = ("a^-1 b^-1 a b", "a b a^-1 b^-1")


def comm(a, b, convention="a^-1 b^-1 a b"):
    if convention == "a^-1 b^-1 a b":
        return a ** -1 @ b ** -1 @ a @ b
    if convention == "a b a^-1 b^-1":
        return a @ b @ a ** -1 @ b ** -1
    raise ValueError(f"unknown commutator convention {convention!r}")


def _ref_name(ref, i):
    kind, c = ref
    return f"{kind}{c * i % 7}"


def relation_name(rel, i):
    (x, y), rhs = rel
    lhs = f"[{_ref_name(x, i)},{_ref_name(y, i)}]"
    if not rhs:
        return f"{lhs}=1"
    return lhs + "=" + "".join(
        _ref_name(f, i) + (f"^{e}" if e != 1 else "") for f, e in rhs
    )


def check_battery(big, small, i_values=(1, 2, 4), convention="a^-1 b^-1 a b"):
    """Evaluate all relations for each i; big/small map indices 1..6 to
    matrices.  Returns a list of (name, holds) pairs."""
    pick = {"L": big, "l": small}
    results = []
    for i in i_values:
        for rel in RELATIONS:
            (xref, yref), rhs = rel
            x = pick[xref[0]][xref[1] * i % 7]
            y = pick[yref[0]][yref[1] * i % 7]
            lhs = comm(x, y, convention)
            acc = None
            for fref, e in rhs:
                term = pick[fref[0]][fref[1] * i % 7] ** e
                acc = term if acc is None else acc @ term
            ok = lhs.is_identity() if acc is None else lhs == acc
            results.append((f"i={i} {relation_name(rel, i)}", bool(ok)))
    return results


def battery_holds(big, small, i_values=(1, 2, 4), convention="a^-1 b^-1 a b"):
    return all(ok for _, ok in check_battery(big, small, i_values, convention))


LAMBDA_ONLY = tuple(
    rel for rel in RELATIONS if all(ref[0] == "L" for ref in rel[0])
)


def check_star_battery(big, i_values=(1, 2, 4), convention="a^-1 b^-1 a b"):
    """The subset of relations involving only the star generators."""
    results = []
    for i in i_values:
        for rel in LAMBDA_ONLY:
            (xref, yref), rhs = rel
            lhs = comm(big[xref[1] * i % 7], big[yref[1] * i % 7], convention)
            acc = None
            for fref, e in rhs:
                term = big[fref[1] * i % 7] ** e
                acc = term if acc is None else acc @ term
            ok = lhs.is_identity() if acc is None else lhs == acc
            results.append((f"i={i} {relation_name(rel, i)}", bool(ok)))
    return results
