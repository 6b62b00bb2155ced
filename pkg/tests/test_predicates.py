from __future__ import annotations

import pytest

from formationlab.corpus import build_group, cyclic, dihedral, direct_product, symmetric
from formationlab.errors import InputError
from formationlab.lattice import all_subgroups
from formationlab.predicates import (
    has_sylow_tower_sst,
    in_f_p,
    is_abelian,
    is_cyclic,
    is_nilpotent,
    is_nilpotent_sylow,
    is_primary,
    is_soluble,
    is_supersoluble,
    is_supersoluble_chief,
)

from conftest import group_of


class TestBasicPredicates:
    def test_primary_prime_powers(self):
        c8 = group_of(8, "(1 2 3 4 5 6 7 8)")
        assert is_primary(c8)
        assert not is_primary(group_of(6, "(1 2 3 4 5 6)"))
        assert not is_primary(group_of(1))

    def test_cyclic(self, klein, c6):
        assert not is_cyclic(klein)
        assert is_cyclic(c6)
        assert is_cyclic(group_of(1))

    def test_cyclic_implies_exponent_equals_order(self, klein, c6, s3, s4, q8):
        # only one direction holds: S3 has exponent 6 = |S3| without being cyclic
        from formationlab.groups import exponent

        for g in (klein, c6, s3, s4, q8, group_of(1)):
            if is_cyclic(g):
                assert exponent(g) == g.order
        assert exponent(s3) == s3.order and not is_cyclic(s3)

    def test_abelian(self, klein, s3, c6):
        assert is_abelian(klein)
        assert is_abelian(c6)
        assert not is_abelian(s3)

    def test_soluble(self, s4, a5, s5):
        assert is_soluble(s4)
        assert not is_soluble(a5)
        assert not is_soluble(s5)

    def test_nilpotent(self, q8, s3, klein):
        assert is_nilpotent(q8)
        assert not is_nilpotent(s3)
        assert is_nilpotent(klein)

    def test_nilpotent_dual_algorithms_agree(self, s3, s4, a4, a5, q8, klein, c6):
        for g in (s3, s4, a4, a5, q8, klein, c6):
            assert is_nilpotent(g) == is_nilpotent_sylow(g)

    def test_implication_chain(self, s3, s4, a4, a5, q8, klein, c6):
        for g in (s3, s4, a4, a5, q8, klein, c6):
            lat = all_subgroups(g)
            cyc, ab, nil = is_cyclic(g), is_abelian(g), is_nilpotent(g)
            ss, tower, sol = is_supersoluble(g, lat), has_sylow_tower_sst(g, lat), is_soluble(g)
            assert not cyc or ab
            assert not ab or nil
            assert not nil or ss
            assert not ss or tower
            assert not tower or sol


class TestSupersoluble:
    def test_s3(self, s3):
        assert is_supersoluble(s3, all_subgroups(s3))

    def test_a4_fails(self, a4):
        assert not is_supersoluble(a4, all_subgroups(a4))

    @pytest.mark.parametrize("n", [1, 2, 6, 12, 30])
    def test_cyclic_always(self, n):
        g = build_group(cyclic(n))
        assert is_supersoluble(g, all_subgroups(g))

    def test_dual_algorithms_agree(self, s3, s4, a4, a5, q8, klein):
        groups = [s3, s4, a4, a5, q8, klein]
        groups += [build_group(dihedral(n)) for n in (3, 4, 6, 10)]
        groups += [build_group(direct_product(symmetric(3), cyclic(3)))]
        for g in groups:
            lat = all_subgroups(g)
            assert is_supersoluble(g, lat) == is_supersoluble_chief(g, lat)

    def test_inherited_by_subgroups_and_quotients(self, s3):
        from formationlab.groups import quotient_by
        from formationlab.lattice import normal_subgroups

        g = build_group(dihedral(6))
        lat = all_subgroups(g)
        assert is_supersoluble(g, lat)
        for h in lat.subgroups:
            assert is_supersoluble(h, lat.restrict(h))
        for n in normal_subgroups(lat):
            q = quotient_by(g, n).group
            assert is_supersoluble(q, all_subgroups(q))

    def test_wrong_lattice_rejected(self, s3, s4):
        with pytest.raises(InputError):
            is_supersoluble(s3, all_subgroups(s4))


class TestSylowTower:
    def test_s3(self, s3):
        assert has_sylow_tower_sst(s3, all_subgroups(s3))

    def test_s4_fails(self, s4):
        assert not has_sylow_tower_sst(s4, all_subgroups(s4))

    def test_nilpotent_groups_pass(self, q8, klein, c6):
        for g in (q8, klein, c6):
            assert has_sylow_tower_sst(g, all_subgroups(g))

    def test_lattice_optional(self, s3):
        assert has_sylow_tower_sst(s3)


class TestFpClass:
    def test_s3_at_7(self, s3):
        assert in_f_p(s3, 7)  # soluble, exponent 6 divides 6

    def test_s3_at_5(self, s3):
        assert not in_f_p(s3, 5)  # 6 does not divide 4

    def test_trivial_group_everywhere(self):
        triv = group_of(1)
        for p in (2, 3, 5, 7):
            assert in_f_p(triv, p)

    def test_requires_prime(self, s3):
        with pytest.raises(InputError):
            in_f_p(s3, 6)

    def test_monotone_under_divisibility(self, s3, klein, c6, q8):
        # if exponent divides p-1 and (p-1) | (q-1), it divides q-1 too
        primes = (2, 3, 5, 7, 13)
        for g in (s3, klein, c6, q8):
            for p in primes:
                for q in primes:
                    if (q - 1) % (p - 1) == 0 and in_f_p(g, p):
                        assert in_f_p(g, q)

    def test_insoluble_never(self, a5):
        for p in (2, 3, 5, 61):
            assert not in_f_p(a5, p)
