import pytest

from usl2.algebra import UBAR, UZQ, AlgElem, TensorElem, DPrefix, GenWord, EPOW, FPOW, K_
from usl2.qring import LaurentPoly, RatFunc, q_brace, v_int
from usl2.rep import (
    Mat, RepRingElement, mono_diag, ptilde, ptilde_product_identity,
    qtrace, qtrace_tensor_pure, rep, repring_mul,
)

V = LaurentPoly.v_pow
Q = LaurentPoly.q_pow
ONE = LaurentPoly.one()


class TestRepMatrices:
    @pytest.mark.parametrize("l", range(1, 7))
    def test_defining_relations(self, l):
        r = rep(l)
        two_E = r.E.scale(2)
        assert r.H @ r.E - r.E @ r.H == two_E
        assert r.H @ r.F - r.F @ r.H == r.F.scale(-2)
        comm = r.E @ r.F - r.F @ r.E
        rhs = (r.K - r.Kinv).divexact(V(1) - V(-1))
        assert comm == rhs
        assert r.K @ r.Kinv == Mat.eye(l)

    @pytest.mark.parametrize("l", range(1, 7))
    def test_nilpotency(self, l):
        r = rep(l)
        assert r._power("E", l).is_zero()
        assert r._power("F", l).is_zero()
        assert r.letter("E~", l).is_zero()
        assert r.letter("F~", l).is_zero()

    def test_rep1_trivial(self):
        r = rep(1)
        assert r.E.is_zero() and r.F.is_zero()
        assert r.K == Mat.eye(1)

    def test_rep2_commutator_on_v0(self):
        r = rep(2)
        comm = r.E @ r.F - r.F @ r.E
        assert comm.rows[0][0] == ONE
        assert comm.rows[1][1] == -ONE

    def test_small_generators_integral(self):
        # e, f, E~(n), F~(n) have Z[v^+-1] entries by construction
        for l in range(1, 6):
            r = rep(l)
            for n in range(0, l):
                r.Etil(n)
                r.Ftil(n)


class TestQTrace:
    @pytest.mark.parametrize("l", range(1, 6))
    def test_unknot_trace(self, l):
        one = TensorElem.unit(1, UZQ)
        assert qtrace_tensor_pure((l,), one) == v_int(l)

    def test_trace_of_K2(self):
        x = TensorElem(1, {((0, 2, 0),): ONE}, UZQ)
        assert qtrace_tensor_pure((2,), x) == V(1) + V(-1)

    def test_V1_counit_like(self):
        x = TensorElem(1, {((0, 2, 0),): ONE}, UZQ)
        assert qtrace_tensor_pure((1,), x) == ONE

    def test_degree_nonzero_monomials_traceless(self):
        assert all(e.is_zero() for e in mono_diag(4, (1, 0, 2), UZQ))

    def test_prefix_diagonal_weight_rule(self):
        # tr_q^{V_2} of (v^{H^2/2} K): each weight w contributes v^{w^2/2 + w - w}
        x = TensorElem(1, {((0, 0, 0),): ONE}, UZQ, DPrefix([[1]]))
        got = qtrace_tensor_pure((2,), x)
        assert got == LaurentPoly.u_pow(1, 2)

    def test_prefix_offdiagonal_weight_rule(self):
        # D_{12}^2 on V_2 (x) V_2: factor v^{w1 w2 - w1 - w2}
        x = TensorElem(2, {((0, 0, 0), (0, 0, 0)): ONE}, UZQ,
                       DPrefix([[0, 1], [1, 0]]))
        got = qtrace_tensor_pure((2, 2), x)
        want = V(-1) * 3 + V(3)
        assert got == want


class TestRepRing:
    def test_clebsch_gordan(self):
        V2 = RepRingElement.V(2)
        assert V2 * V2 == RepRingElement({1: RatFunc(1), 3: RatFunc(1)})
        assert RepRingElement.V(1) * RepRingElement.V(5) == RepRingElement.V(5)
        assert V2 * RepRingElement.V(3) == RepRingElement(
            {2: RatFunc(1), 4: RatFunc(1)})

    def test_dimension_count(self):
        for a in range(1, 5):
            for b in range(1, 5):
                prod = RepRingElement.V(a) * RepRingElement.V(b)
                assert sum(l for l in prod.coeffs) == a * b

    def test_delta_character_compatibility(self):
        # tr_q (x) tr_q of Delta(x) equals the Clebsch-Gordan sum of tr_q(x)
        gens = [GenWord(((K_, 1),)), GenWord(((EPOW, 1),)), GenWord(((FPOW, 1),))]
        from usl2.algebra import hopf_delta
        for w in gens:
            for a in range(1, 4):
                for b in range(1, 4):
                    ra, rb = rep(a), rep(b)
                    lhs = LaurentPoly.zero()
                    for left, right in hopf_delta(w):
                        lhs = lhs + (ra.qtrace_matrix(ra.word_matrix(left))
                                     * rb.qtrace_matrix(rb.word_matrix(right)))
                    rhs = LaurentPoly.zero()
                    for c in range(abs(a - b) + 1, a + b, 2):
                        rc = rep(c)
                        rhs = rhs + rc.qtrace_matrix(rc.word_matrix(w))
                    assert lhs == rhs, (w, a, b)


class TestPtilde:
    def test_ptilde0(self):
        assert ptilde(0) == RepRingElement.V(1)

    def test_ptilde1_value(self):
        qm1 = q_brace(1)
        want = RepRingElement({
            2: RatFunc(V(1), qm1),
            1: RatFunc(-V(1) * (V(1) + V(-1)), qm1),
        })
        assert ptilde(1) == want

    @pytest.mark.parametrize("l", range(1, 5))
    def test_unknot_annihilation(self, l):
        got = qtrace([ptilde(l)], TensorElem.unit(1, UZQ))
        assert got.is_zero()

    def test_support_bound(self):
        # top component is V_{l+1} (inside the loose {V_1..V_{2l+1}} bound)
        for l in range(0, 5):
            assert max(ptilde(l).coeffs) == l + 1

    @pytest.mark.parametrize("m,n", [(0, 0), (1, 0), (1, 1), (2, 1), (2, 2)])
    def test_product_identity(self, m, n):
        assert ptilde_product_identity(m, n)


class TestHalfPowerBookkeeping:
    def test_framed_prefix_lands_in_u(self):
        # odd weights with diagonal prefix give honest u-powers, never fractions
        x = TensorElem(1, {((0, 0, 0),): ONE}, UZQ, DPrefix([[3]]))
        for l in (2, 4):
            qtrace_tensor_pure((l,), x)

    def test_zero_framed_lands_in_v(self):
        x = TensorElem(2, {((0, -2, 0), (1, 0, 1)): ONE}, UZQ,
                       DPrefix([[0, -1], [-1, 0]]))
        got = qtrace_tensor_pure((3, 2), x)
        assert got.is_v_laurent()
