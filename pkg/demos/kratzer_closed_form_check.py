"""Kratzer potential: matrix spectrum against the closed-form levels.

The potential -A/r + B/(2 r^2) is exactly solvable, which makes it the
natural end-to-end check of the matrix pipeline: every digit the
diagonalization gets right must agree with the closed-form energies.
"""

from trilag import BasisSpec, KratzerParams, bound_states, kratzer_exact


def main():
    A = 1.0
    for B, ell, lam in [(50.0, 1, 0.6), (5.0, 2, 0.3), (1.0, 5, 0.3)]:
        p = KratzerParams(coulomb=A, inverse_square=B)
        result = bound_states(p, BasisSpec(lam=lam, ell=ell, size=100))
        print("B = %-4g ell = %d (basis scale %g)" % (B, ell, lam))
        print("  n   matrix              closed form         |diff|")
        for n in range(5):
            exact = kratzer_exact(A, B, ell, n)
            e = float(result.bound[n])
            print("  %d   %.15f   %.15f   %.1e" % (n, e, exact, abs(e - exact)))
        print()


if __name__ == "__main__":
    main()
