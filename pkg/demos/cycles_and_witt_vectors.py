"""Zero-cycles on the affine line map to Witt vectors compatibly with F, V and the product."""

from wittkit.exact import GF
from wittkit.modulus import (RationalFunctionP1, cycle_frobenius, cycle_star, cycle_verschiebung,
                             divisor_of, hasse_arf_check, parse_cycle, phi, phi_hat)
from wittkit.witt.big import frobenius, verschiebung, witt_star


def main():
    F = GF(7)
    c1 = parse_cycle("[x^2+1] - 2[x-3]", F)
    c2 = parse_cycle("[x^3+x+4]", F)
    n = 4
    print("phi(c1)           =", phi(c1, n).coeffs)
    print("phi_hat(c1)       =", phi_hat(c1, n).to_json())
    print("phi(c1 * c2)      =", phi(cycle_star(c1, c2), n).coeffs)
    print("phi(c1) * phi(c2) =", witt_star(phi(c1, n), phi(c2, n)).coeffs)
    print("phi(F_2 c1)       =", phi(cycle_frobenius(2, c1), 2).coeffs,
          " F_2 phi(c1) =", frobenius(2, phi(c1, n)).coeffs)
    print("phi(V_2 c1)       =", phi(cycle_verschiebung(2, c1), n).coeffs,
          " V_2 phi(c1) =", verschiebung(2, phi(c1, 2)).coeffs)

    # f - 1 vanishes to order 5 = n + 1 at infinity, so div f dies under phi
    f = RationalFunctionP1.parse("(x^6 + 3*x + 1)/(x^6 + 2)", F)
    print("div f             =", divisor_of(f), " phi(div f) =", phi(divisor_of(f), n).coeffs)

    for r in ("3/2", "7/3", "4"):
        rep = hasse_arf_check(r, samples=40, seed=1)
        print(f"Hasse-Arf r={r}: {rep.agreements}/{rep.samples} agree")


if __name__ == "__main__":
    main()
