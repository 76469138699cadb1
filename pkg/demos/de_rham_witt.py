"""A bounded presentation of W_2 Omega^1 of F_3[x] and a few identities decided in it."""

from wittkit.drw import (BoundedPresentation, MonomialAlgebra, fd_power_reduce, lambda_injectivity,
                         level1_dimensions, parse_expression)


def main():
    A = MonomialAlgebra.parse("F3[x]")
    P = BoundedPresentation(A, 2, 1, 3, 2)
    for row in P.ranks_per_depth():
        print("weight", row["weight"], "generators", row["generators"], "log_3 quotient", row["depth2"])

    for lhs, rhs in [("F(d[x^2])", "2*[x^5]*d[x]"), ("F(d[x^2])", "[x^5]*d[x]"),
                     ("3*d[x]", "0"), ("V([x]*d[x])", "0")]:
        v = P.equal_at_depth(parse_expression(lhs, A, 2), parse_expression(rhs, A, 2))
        print(f"{lhs} = {rhs}: {v.status} ({v.detail})")

    for m, e in [(1, 1), (2, 1), (4, 2)]:
        r = fd_power_reduce(3, m, e)
        print(f"{r.lhs} = {r.rhs}: {r.status}")

    print("lambda on W_2(F_5):", lambda_injectivity(5, 2)["pass"])
    print("level 1 versus Kahler, q=1:", level1_dimensions(A, 1, 4))


if __name__ == "__main__":
    main()
