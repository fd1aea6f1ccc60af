import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from bingspace import core
from bingspace.core import (
    BinOpTable,
    PermFamily,
    Permutation,
    binop_to_perm_family,
    brute_enumerate_invertible,
    compose,
    element_order,
    embed_homeomorphism,
    enumerate_h2,
    identity_binop,
    invert,
    is_invertible,
    perm_family_to_binop,
    slice_at,
)
from bingspace.errors import CapacityError, DimensionError, NotInvertibleError, ValidationError

from conftest import E2, PHI1, PHI2, PHI3, random_invertible, random_table


def tables_strategy(n):
    return st.lists(st.lists(st.integers(0, n - 1), min_size=n, max_size=n), min_size=n, max_size=n).map(BinOpTable)


def invertible_strategy(n):
    return st.lists(st.permutations(range(n)), min_size=n, max_size=n).map(BinOpTable)


def loop_compose(f, g):
    n = f.n
    return [[f(t, g(t, x)) for x in range(n)] for t in range(n)]


def all_tables(n):
    for flat in itertools.product(range(n), repeat=n * n):
        yield BinOpTable(np.array(flat).reshape(n, n))


class TestIdentityAndCompose:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_identity_rows(self, n):
        assert identity_binop(n).tolist() == [list(range(n))] * n

    def test_klein_product(self):
        assert compose(PHI1, PHI2) == PHI3
        assert PHI1 * PHI2 == PHI3

    def test_frozen_random_pair(self):
        f = BinOpTable([[1, 0, 1], [2, 0, 0], [2, 0, 1]])
        g = BinOpTable([[2, 0, 2], [0, 0, 0], [1, 1, 0]])
        assert compose(f, g).tolist() == [[1, 1, 1], [2, 2, 2], [0, 0, 2]]

    @given(tables_strategy(3), tables_strategy(3))
    def test_matches_double_loop(self, f, g):
        assert compose(f, g).tolist() == loop_compose(f, g)

    def test_carrier_mismatch(self):
        with pytest.raises(DimensionError):
            compose(identity_binop(2), identity_binop(3))

    def test_bad_entries_rejected(self):
        with pytest.raises(ValidationError):
            BinOpTable([[0, 2], [0, 1]])
        with pytest.raises(ValidationError):
            BinOpTable([[0, 1]])


class TestMonoidLaws:
    def test_exhaustive_n2(self):
        tables = list(all_tables(2))
        e = identity_binop(2)
        for f in tables:
            assert f * e == f and e * f == f
            for g in tables:
                fg = f * g
                for h in tables:
                    assert f * (g * h) == fg * h

    @settings(max_examples=200)
    @given(st.integers(3, 4).flatmap(lambda n: st.tuples(tables_strategy(n), tables_strategy(n), tables_strategy(n))))
    def test_random_associativity(self, fgh):
        f, g, h = fgh
        assert f * (g * h) == (f * g) * h
        e = identity_binop(f.n)
        assert f * e == f == e * f


class TestSlice:
    def test_identity_slices(self):
        assert slice_at(identity_binop(3), 1) == (0, 1, 2)

    def test_phi2_slices(self):
        assert slice_at(PHI2, 0) == (0, 1)
        assert slice_at(PHI2, 1) == (1, 0)

    def test_out_of_range(self):
        with pytest.raises(IndexError):
            slice_at(PHI2, 2)


class TestInvertibility:
    def test_identity(self):
        assert is_invertible(identity_binop(4))

    def test_constant(self):
        assert not is_invertible(BinOpTable([[0, 0], [0, 0]]))

    def test_four_of_sixteen(self):
        assert sum(is_invertible(f) for f in all_tables(2)) == 4

    def test_invert_identity_and_phi1(self):
        assert invert(identity_binop(3)) == identity_binop(3)
        assert invert(PHI1) == PHI1

    def test_invert_frozen_unique_inverse(self):
        # unique two-sided inverse found by scanning all 3^9 tables
        h = BinOpTable([[0, 2, 1], [0, 1, 2], [2, 0, 1]])
        assert invert(h).tolist() == [[0, 2, 1], [0, 1, 2], [1, 2, 0]]

    def test_invert_rejects(self):
        with pytest.raises(NotInvertibleError):
            invert(BinOpTable([[0, 0], [0, 1]]))

    @given(st.integers(1, 5).flatmap(invertible_strategy))
    def test_inverse_is_two_sided(self, f):
        g = invert(f)
        e = identity_binop(f.n)
        assert f * g == e == g * f

    def test_criterion_against_search_n2(self):
        tables = list(all_tables(2))
        e = identity_binop(2)
        for f in tables:
            has_inverse = any(f * g == e and g * f == e for g in tables)
            assert has_inverse == is_invertible(f)

    def test_exhaustive_search_helper(self):
        tables = core.all_tables_array(2)
        counts, first = core.exhaustive_inverse_search(tables, 2)
        assert np.array_equal(counts > 0, [is_invertible(BinOpTable(t)) for t in tables])
        assert set(counts.tolist()) == {0, 1}
        for t, j in zip(tables, first):
            if j >= 0:
                assert BinOpTable(tables[j]) == invert(BinOpTable(t))


class TestPermFamilies:
    def test_identity_family(self):
        fam = PermFamily([Permutation.identity(3)] * 3)
        assert perm_family_to_binop(fam) == identity_binop(3)
        assert binop_to_perm_family(identity_binop(3)) == fam

    def test_phi_examples(self):
        swap = Permutation([1, 0])
        assert perm_family_to_binop(PermFamily([swap, swap])) == PHI1
        assert binop_to_perm_family(PHI2) == PermFamily([[0, 1], [1, 0]])

    def test_round_trip_all_n3(self):
        perms = list(itertools.permutations(range(3)))
        count = 0
        for rows in itertools.product(perms, repeat=3):
            fam = PermFamily(rows)
            f = perm_family_to_binop(fam)
            assert is_invertible(f)
            assert binop_to_perm_family(f) == fam
            assert perm_family_to_binop(binop_to_perm_family(f)) == f
            count += 1
        assert count == 216

    def test_homomorphism_all_pairs_n2(self):
        fams = [PermFamily(rows) for rows in itertools.product([[0, 1], [1, 0]], repeat=2)]
        for F in fams:
            for G in fams:
                assert perm_family_to_binop(F * G) == perm_family_to_binop(F) * perm_family_to_binop(G)

    def test_rejects_non_invertible(self):
        with pytest.raises(NotInvertibleError):
            binop_to_perm_family(BinOpTable([[0, 0], [0, 1]]))

    def test_bad_family(self):
        with pytest.raises(ValidationError):
            PermFamily([[0, 1, 2], [0, 1]])
        with pytest.raises(ValidationError):
            Permutation([0, 0, 1])


class TestEmbedding:
    def test_identity_and_swap(self):
        assert embed_homeomorphism(Permutation.identity(3)) == identity_binop(3)
        assert embed_homeomorphism(Permutation([1, 0])) == PHI1

    def test_injective_and_multiplicative_n3(self):
        perms = [Permutation(p) for p in itertools.permutations(range(3))]
        images = [embed_homeomorphism(p) for p in perms]
        assert len(set(images)) == 6
        for s, es in zip(perms, images):
            assert is_invertible(es)
            assert embed_homeomorphism(s.inverse()) == invert(es)
            for t, et in zip(perms, images):
                assert embed_homeomorphism(s * t) == es * et


class TestEnumeration:
    @pytest.mark.parametrize("n, count", [(1, 1), (2, 4), (3, 216)])
    def test_counts(self, n, count):
        assert len(list(enumerate_h2(n))) == count == math.factorial(n) ** n

    def test_n2_is_klein_set(self):
        assert set(enumerate_h2(2)) == {E2, PHI1, PHI2, PHI3}

    def test_order_is_lexicographic(self):
        tables = list(enumerate_h2(2))
        assert tables == [E2, PHI2, PHI3, PHI1]

    def test_distinct(self):
        assert len(set(enumerate_h2(3))) == 216

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_brute_agrees(self, n):
        assert set(brute_enumerate_invertible(n)) == set(enumerate_h2(n))

    def test_caps(self):
        with pytest.raises(CapacityError):
            core.enumerate_h2_array(5)
        with pytest.raises(CapacityError):
            core.brute_invertible_array(4)

    def test_env_may_lower_cap(self, monkeypatch):
        monkeypatch.setenv("BINOP_MAX_N", "2")
        with pytest.raises(CapacityError):
            core.enumerate_h2_array(3)
        monkeypatch.setenv("BINOP_MAX_N", "9")
        with pytest.raises(CapacityError):
            core.enumerate_h2_array(5)

    def test_group_closure_n3(self):
        tables = list(enumerate_h2(3))
        members = set(tables)
        assert identity_binop(3) in members
        for f in tables:
            assert invert(f) in members
            for g in tables[::7]:
                assert f * g in members

    def test_closure_sampled_n4(self, rng):
        arr = core.enumerate_h2_array(4)
        members = {t.tobytes() for t in arr}
        for _ in range(500):
            i, j = rng.integers(0, arr.shape[0], size=2)
            f, g = BinOpTable(arr[i]), BinOpTable(arr[j])
            assert (f * g).table.tobytes() in members
            assert invert(f).table.tobytes() in members

    def test_h2_index_matches_enumeration(self):
        arr = core.enumerate_h2_array(3)
        assert np.array_equal(core.h2_index(arr), np.arange(216))


class TestElementOrder:
    def test_examples(self):
        assert element_order(identity_binop(3)) == 1
        assert [element_order(p) for p in (PHI1, PHI2, PHI3)] == [2, 2, 2]
        assert element_order(BinOpTable([[1, 2, 0]] * 3)) == 3

    def test_rejects(self):
        with pytest.raises(NotInvertibleError):
            element_order(BinOpTable([[0, 0], [0, 0]]))

    @given(st.integers(1, 4).flatmap(invertible_strategy))
    def test_order_is_lcm_of_row_orders(self, f):
        def perm_order(row):
            k, p = 1, list(row)
            while p != sorted(row):
                p = [row[i] for i in p]
                k += 1
            return k

        expected = math.lcm(*(perm_order(list(r)) for r in f.tolist()))
        assert element_order(f) == expected
