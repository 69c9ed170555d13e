"""Independent brute-force oracle for the golden invariant values.

Works entirely on 2-strand torus words sigma_1^k by naive recursion on
the defining relation (no diagrams, no memoization, none of the engine's
machinery): switching a crossing of the closure of sigma_1^k gives the
closure of sigma_1^(k-2), smoothing gives sigma_1^(k-1). Grounding:
P = 1 for k = +-1 (those closures are unknots) and the k = 0 value,
the split 2-unlink, follows from the relation applied at a kink:
a*P(sigma_1) - a^-1*P(sigma_1^-1) = z*P(identity).
"""

from knotqc.laurent import LaurentPoly2


def _mono(coeff, a_exp, z_exp):
    return LaurentPoly2.monomial(coeff, a_exp, z_exp)


def torus_closure_value(k: int) -> LaurentPoly2:
    """Invariant of the closure of sigma_1^k in the 2-strand group."""
    if k in (1, -1):
        return LaurentPoly2.one()
    if k == 0:
        # (a - a^-1) z^-1, read off the kink instance of the relation.
        return _mono(1, 1, -1) + _mono(-1, -1, -1)
    if k >= 2:
        # a P(k) - a^-1 P(k-2) = z P(k-1)
        return _mono(1, -2, 0) * torus_closure_value(k - 2) + _mono(
            1, -1, 1
        ) * torus_closure_value(k - 1)
    # k <= -2: the crossing is negative; solve for P(k) instead.
    return _mono(1, 2, 0) * torus_closure_value(k + 2) + _mono(
        -1, 1, 1
    ) * torus_closure_value(k + 1)


UNKNOT = torus_closure_value(1)
UNLINK2 = torus_closure_value(0)
HOPF_POSITIVE = torus_closure_value(2)
TREFOIL = torus_closure_value(3)
