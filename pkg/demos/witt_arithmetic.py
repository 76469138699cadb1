"""Big and p-typical Witt vectors: Teichmuller products, F and V, ghost maps."""

from wittkit.exact import ZZ, parse_ring
from wittkit.witt.big import (BigWittVector, frobenius, ghost, verschiebung, witt_add, witt_coordinates,
                              witt_star)
from wittkit.witt.ptypical import PTypicalWitt


def main():
    a = BigWittVector.teichmuller(ZZ, ZZ.convert(-1), 3)
    print("[-1] * [-1] =", witt_star(a, a).coeffs)

    R = parse_ring("Z/12")
    u = BigWittVector(R, [R.convert(c) for c in (1, 2, 3, 4)])
    v = BigWittVector(R, [R.convert(c) for c in (5, 0, 7, 1)])
    print("u + v       =", witt_add(u, v).coeffs)
    print("u * v       =", witt_star(u, v).coeffs)
    print("F_2 u       =", frobenius(2, u).coeffs)
    print("V_2 F_2 u   =", verschiebung(2, frobenius(2, u)).coeffs)
    print("witt coords =", witt_coordinates(u))
    print("ghost of u  =", ghost(BigWittVector(ZZ, [1, 2, 3, 4])).entries)

    x = PTypicalWitt(ZZ, 3, [ZZ.convert(2), ZZ.convert(1)])
    y = PTypicalWitt(ZZ, 3, [ZZ.convert(1), ZZ.convert(5)])
    print("p=3: x + y  =", (x + y).components, " x * y =", (x * y).components)


if __name__ == "__main__":
    main()
