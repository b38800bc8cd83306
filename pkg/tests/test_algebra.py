import itertools

import pytest
from hypothesis import given, settings, strategies as st

from usl2.algebra import (
    EPOW, ETIL, FPOW, FTIL, K_, UBAR, UZQ,
    AlgElem, DPrefix, GenWord, TensorElem,
    ad_apply, dprefix_push, hopf_antipode, hopf_counit, hopf_delta,
    pbw_mul, support_check, tensor_outer, word_Etil, word_Ftil, word_K,
    word_from_mono,
)
from usl2.qring import LaurentPoly, q_factorial
from usl2.rep import rep

Q = LaurentPoly.q_pow
ONE = LaurentPoly.one()


def mono(a, b, c, coeff=ONE, basis=UBAR):
    return AlgElem.monomial(a, b, c, coeff, basis)


def elem_in_reps(x, lmax=4):
    return tuple(rep(l).elem_matrix(x) for l in range(1, lmax + 1))


class TestPbwMul:
    def test_e_times_f(self):
        # e f = q^-1 f e + (q-1)(K^2 - 1)
        got = mono(0, 0, 1) * mono(1, 0, 0)
        want = AlgElem({
            (1, 0, 1): Q(-1),
            (0, 2, 0): Q(1) - 1,
            (0, 0, 0): -(Q(1) - 1),
        })
        assert got == want

    def test_K_times_e(self):
        # K e is already normally ordered; q e K denotes the same element
        assert mono(0, 1, 0) * mono(0, 0, 1) == mono(0, 1, 1)
        assert mono(0, 0, 1) * mono(0, 1, 0) == mono(0, 1, 1, Q(-1))

    def test_unit(self):
        x = mono(2, -1, 3, Q(2) + 1)
        assert AlgElem.one() * x == x
        assert x * AlgElem.one() == x

    @given(st.lists(st.tuples(st.integers(0, 3), st.integers(-3, 3), st.integers(0, 3)),
                    min_size=3, max_size=3))
    @settings(max_examples=60, deadline=None)
    def test_associative(self, monos):
        x, y, z = (mono(*m) for m in monos)
        assert (x * y) * z == x * (y * z)

    @pytest.mark.parametrize("m,n", [(m, n) for m in range(5) for n in range(5)])
    def test_b2_against_rep_matrices(self, m, n):
        # normal form of e^m f^n versus the defining-relations matrices
        nf = mono(0, 0, m) * mono(n, 0, 0)
        for l in range(1, 5):
            r = rep(l)
            lhs = r._small_power(r.e_small(), m) @ r._small_power(r.f_small(), n)
            assert lhs == r.elem_matrix(nf), (m, n, l)

    def test_uzq_product_against_matrices(self):
        for m1 in [(0, 0, 1), (1, 0, 0), (2, -1, 1), (1, 2, 2)]:
            for m2 in [(1, 0, 1), (0, 1, 2), (2, 0, 0)]:
                prod = AlgElem({m1: ONE}, UZQ) * AlgElem({m2: ONE}, UZQ)
                for l in range(1, 5):
                    r = rep(l)
                    lhs = r.mono_matrix(m1, UZQ) @ r.mono_matrix(m2, UZQ)
                    assert lhs == r.elem_matrix(prod), (m1, m2, l)

    def test_basis_conversion_roundtrip(self):
        x = AlgElem({(2, 1, 1): Q(1), (0, -2, 3): ONE - Q(2)})
        assert x.to_uzq().to_ubar() == x
        for l in range(1, 5):
            assert rep(l).elem_matrix(x) == rep(l).elem_matrix(x.to_uzq())


class TestHopf:
    def test_delta_etil1(self):
        terms = hopf_delta(word_Etil(1))
        assert (GenWord(((ETIL, 1),)), GenWord(())) in terms
        assert (GenWord(((K_, 1),)), GenWord(((ETIL, 1),))) in terms
        assert len(terms) == 2

    def test_antipode_e(self):
        s = hopf_antipode(GenWord(((EPOW, 1),)))
        assert s == GenWord(((K_, -1), (EPOW, 1)), LaurentPoly.const(-1))

    def test_counit(self):
        assert hopf_counit(word_Ftil(3)).is_zero()
        assert hopf_counit(word_Ftil(0)) == ONE
        assert hopf_counit(word_K(5)) == ONE

    @pytest.mark.parametrize("kind", [ETIL, FTIL, EPOW, FPOW])
    @pytest.mark.parametrize("n", [0, 1, 2, 3, 4])
    def test_hopf_axioms_in_reps(self, kind, n):
        w = GenWord(((kind, n),))
        for l in range(1, 4):
            r = rep(l)
            wm = r.word_matrix(w)
            # (eps (x) id) Delta = id
            acc = None
            for left, right in hopf_delta(w):
                piece = r.word_matrix(right).scale(hopf_counit(left))
                acc = piece if acc is None else acc + piece
            assert acc == wm
            # mu (S (x) id) Delta = eps * 1
            acc = None
            for left, right in hopf_delta(w):
                piece = r.word_matrix(hopf_antipode(left)) @ r.word_matrix(right)
                acc = piece if acc is None else acc + piece
            from usl2.rep import Mat
            assert acc == Mat.eye(l).scale(hopf_counit(w))

    def test_antipode_squared_is_K_conjugation(self):
        # S^2(x) = K^-1 x K on the small generators
        for kind in (EPOW, FPOW, ETIL, FTIL):
            w = GenWord(((kind, 2),))
            s2 = hopf_antipode(hopf_antipode(w))
            for l in range(1, 4):
                r = rep(l)
                assert r.word_matrix(s2) == r.K_pow(-1) @ r.word_matrix(w) @ r.K_pow(1)


class TestAd:
    def test_K_on_monomial(self):
        # K acts by q^{degree}
        x = mono(1, 2, 3)
        assert ad_apply(word_K(1), x) == mono(1, 2, 3, Q(2))

    def test_etil_on_e(self):
        # E~(1) acting on e gives -e^2
        got = ad_apply(word_Etil(1), mono(0, 0, 1))
        assert got == mono(0, 0, 2, LaurentPoly.const(-1))

    def test_counit_case(self):
        for w in (word_Etil(2), word_Ftil(1), word_K(3),
                  GenWord(((FTIL, 1), (ETIL, 1)))):
            got = ad_apply(w, AlgElem.one())
            want = AlgElem.one().scale(hopf_counit(w))
            assert got == want

    def test_action_property(self):
        # ad(xy) = ad(x) ad(y)
        x, y = word_Etil(2), word_Ftil(1)
        target = mono(1, -2, 1)
        assert ad_apply(x * y, target) == ad_apply(x, ad_apply(y, target))

    @pytest.mark.parametrize("kind,n", [(k, n) for k in (ETIL, FTIL) for n in range(4)]
                                        + [(K_, 1), (K_, -1)])
    def test_closed_forms_vs_hopf_definition(self, kind, n):
        letters = GenWord(((kind, n),))
        targets = [(a, b, c) for a in range(3) for b in range(-2, 3) for c in range(3)]
        for tgt in targets[::7] + [(1, 0, 1), (0, 2, 1), (2, -1, 0)]:
            closed = ad_apply(letters, mono(*tgt))
            for l in range(1, 5):
                r = rep(l)
                acc = None
                xm = r.mono_matrix(tgt, UBAR)
                for left, right in hopf_delta(letters):
                    piece = r.word_matrix(left) @ xm @ r.word_matrix(hopf_antipode(right))
                    acc = piece if acc is None else acc + piece
                assert acc == r.elem_matrix(closed), (kind, n, tgt, l)

    def test_habiro_stability(self):
        # U_{Z,q} acting on Ubar^ev stays in Ubar^ev
        words = [word_Etil(2), word_Ftil(3), word_K(1),
                 GenWord(((ETIL, 1), (FTIL, 2), (K_, -1)))]
        evens = [mono(1, 2, 1), mono(0, -2, 2), mono(2, 0, 0)]
        for w in words:
            for x in evens:
                got = ad_apply(w, x)
                assert support_check(got, "Ubar_q_ev")

    def test_odd_K_coset_preserved(self):
        w = word_Etil(1)
        got = ad_apply(w, mono(0, 1, 1))
        assert all(b % 2 == 1 for (_, b, _) in got.terms)


class TestSupport:
    def test_unit_everywhere(self):
        one = TensorElem.unit(2, UBAR)
        for which in ("U_Zq_ev", "Ubar_q_ev", "Ubar_q_ev0"):
            assert support_check(one, which)

    def test_even_basis_element(self):
        assert support_check(mono(1, 2, 1), "Ubar_q_ev")
        assert not support_check(mono(0, 1, 0), "Ubar_q_ev")
        assert not support_check(mono(1, 2, 1), "Ubar_q_ev0")
        assert support_check(mono(0, -4, 0), "Ubar_q_ev0")


class TestDPrefixPush:
    def test_zero_prefix_is_plain_ad(self):
        x = tensor_outer([mono(0, 0, 1, basis=UBAR), mono(1, 0, 0)], UBAR)
        x = TensorElem(2, x.terms, UBAR, DPrefix.zeros(2))
        got = dprefix_push(x.prefix, x)
        want_elem = ad_apply(word_from_mono((0, 0, 1), UBAR), mono(1, 0, 0))
        want = TensorElem(1, {(m,): c for m, c in want_elem.terms.items()}, UBAR)
        assert got == want

    def test_diagonal_entry(self):
        # (v^{H^2/2} K) on the acting slot scales by q^{|x|(|x|+1)}
        x = TensorElem(2, {((0, 0, 0), (0, 0, 1)): ONE}, UBAR,
                       DPrefix([[1, 0], [0, 0]]))
        got = dprefix_push(x.prefix, x)
        assert got == TensorElem(1, {((0, 0, 1),): Q(2)}, UBAR)

    def test_offdiagonal_entry(self):
        x = TensorElem(2, {((0, 0, 0), (0, 0, 1)): ONE}, UBAR,
                       DPrefix([[0, 1], [1, 0]]))
        got = dprefix_push(x.prefix, x)
        assert got == TensorElem(1, {((0, 2, 1),): ONE}, UBAR)

    def test_even_even_block_must_vanish(self):
        x = TensorElem(2, {((0, 0, 0), (0, 0, 1)): ONE}, UBAR,
                       DPrefix([[0, 0], [0, 1]]))
        with pytest.raises(ValueError):
            dprefix_push(x.prefix, x)

    def test_tags_propagate(self):
        term = ((0, 0, 1), (1, 0, 0))
        x = TensorElem(2, {term: ONE}, UBAR, DPrefix.zeros(2), tags={term: 2})
        got = dprefix_push(x.prefix, x)
        assert got.tags and all(v == 2 for v in got.tags.values())
