import itertools
import random

import pytest

from brauer.diagram import DomainError, atom, enumerate_all, multiply
from brauer.presentation import (
    Quark,
    RelationId,
    Word,
    apply_relation,
    check_all_relations,
    find_relation_sites,
    gamma,
    is_connected,
    is_normal_form,
    normalize,
    parse_word,
    phi,
    standard_idempotent,
    star,
    word,
    word_to_text,
    words_equal_in_T,
)


def random_word(rng, n=None, max_len=12):
    n = n or rng.randint(2, 8)
    length = rng.randint(1, max_len)
    quarks = []
    for _ in range(length):
        i, j = rng.sample(range(1, n + 1), 2)
        quarks.append(Quark(i, j))
    return Word(n, tuple(quarks))


class TestQuarkAndWord:
    def test_quark_normalizes_order(self):
        assert Quark(3, 1) == Quark(1, 3)
        assert Quark(3, 1).i == 1

    def test_quark_rejects_equal(self):
        with pytest.raises(DomainError):
            Quark(2, 2)

    def test_word_requires_quarks_within_rank(self):
        with pytest.raises(DomainError):
            word(3, [(1, 4)])

    def test_word_nonempty(self):
        with pytest.raises(DomainError):
            Word(3, ())


class TestPhi:
    def test_single_generator(self):
        assert phi(word(4, [(1, 2)])) == atom(4, 1, 2)

    def test_relation5_images_agree(self):
        assert phi(word(3, [(1, 2), (2, 3), (1, 2)])) == phi(word(3, [(1, 2)]))

    def test_derived_product(self):
        # same value as the diagram-side hand-traced product
        assert phi(word(3, [(1, 3), (1, 2)])) == multiply(atom(3, 1, 3), atom(3, 1, 2))

    def test_image_is_singular(self):
        rng = random.Random(21)
        for _ in range(200):
            assert phi(random_word(rng)).corank >= 2


class TestWordsEqual:
    def test_reflexive(self):
        w = word(4, [(1, 2), (3, 4)])
        assert words_equal_in_T(w, w)

    def test_commuting_disjoint(self):
        assert words_equal_in_T(word(4, [(1, 2), (3, 4)]), word(4, [(3, 4), (1, 2)]))

    def test_distinct_atoms(self):
        assert not words_equal_in_T(word(3, [(1, 2)]), word(3, [(1, 3)]))

    def test_rank_mismatch(self):
        with pytest.raises(DomainError):
            words_equal_in_T(word(3, [(1, 2)]), word(4, [(1, 2)]))


class TestApplyRelation:
    def test_r2_contracts(self):
        r = RelationId("R2", 0, (("i", 1), ("j", 2)))
        assert apply_relation(word(2, [(1, 2), (1, 2)]), r) == word(2, [(1, 2)])

    def test_r5_contracts(self):
        r = RelationId("R5", 0, (("i", 1), ("j", 2), ("k", 3)))
        assert apply_relation(word(3, [(1, 2), (2, 3), (1, 2)]), r) == word(3, [(1, 2)])

    def test_r3_rewrites(self):
        r = RelationId("R3", 0, (("i", 1), ("j", 2), ("k", 3), ("l", 4)))
        got = apply_relation(word(4, [(1, 2), (2, 3), (3, 4)]), r)
        assert got == word(4, [(1, 2), (1, 4), (3, 4)])

    def test_site_mismatch_rejected(self):
        r = RelationId("R2", 0, (("i", 1), ("j", 2)))
        with pytest.raises(DomainError):
            apply_relation(word(2, [(1, 2)]), r)  # too short
        r = RelationId("R2", 0, (("i", 1), ("j", 3)))
        with pytest.raises(DomainError):
            apply_relation(word(3, [(1, 2), (1, 2)]), r)  # wrong binding

    def test_distinctness_enforced(self):
        r = RelationId("R3", 0, (("i", 1), ("j", 2), ("k", 1), ("l", 4)))
        with pytest.raises(DomainError):
            apply_relation(word(4, [(1, 2), (2, 1), (1, 4)]), r)

    def test_reverse_expands(self):
        r = RelationId("R5", 0, (("i", 1), ("j", 2), ("k", 3)), reverse=True)
        assert apply_relation(word(3, [(1, 2)]), r) == word(3, [(1, 2), (2, 3), (1, 2)])

    def test_fuzz_phi_preserved(self):
        rng = random.Random(42)
        trials = 0
        for _ in range(300):
            w = random_word(rng, max_len=8)
            sites = find_relation_sites(w)
            if not sites:
                continue
            for r in rng.sample(sites, min(5, len(sites))):
                rewritten = apply_relation(w, r)
                assert phi(rewritten) == phi(w), (w, r)
                trials += 1
        assert trials > 300


class TestStar:
    def test_generator_fixed(self):
        assert star(word(3, [(1, 2)])) == word(3, [(1, 2)])

    def test_reverses(self):
        assert star(word(3, [(1, 2), (1, 3)])) == word(3, [(1, 3), (1, 2)])

    def test_involution(self):
        rng = random.Random(77)
        for _ in range(100):
            w = random_word(rng)
            assert star(star(w)) == w

    def test_anti_morphism_on_images(self):
        rng = random.Random(78)
        for _ in range(100):
            w = random_word(rng)
            assert phi(star(w)) == phi(w).transpose()

    def test_connected_word_contracts_to_head(self):
        # (tau w)(tau w)* = tau for connected tau w
        rng = random.Random(79)
        done = 0
        while done < 200:
            w = random_word(rng)
            if not is_connected(w):
                continue
            both = Word(w.n, w.quarks + star(w).quarks)
            assert phi(both) == phi(Word(w.n, w.quarks[:1]))
            done += 1


class TestConnected:
    @pytest.mark.parametrize(
        "pairs,expected",
        [
            ([(1, 2)], True),
            ([(1, 2), (2, 3), (3, 4)], True),
            ([(1, 2), (3, 4)], False),
            ([(1, 2), (1, 2)], True),
        ],
    )
    def test_examples(self, pairs, expected):
        assert is_connected(word(4, pairs)) is expected


class TestNormalize:
    def test_already_normal(self):
        w = word(3, [(1, 2)])
        assert normalize(w) == w

    def test_case3_example(self):
        w = word(4, [(1, 2), (3, 4), (1, 3)])
        got = normalize(w)
        assert is_normal_form(got)
        assert phi(got) == phi(w)
        assert got == word(4, [(1, 2), (2, 4), (1, 3)])

    def test_fuzz_preserves_phi_and_shape(self):
        rng = random.Random(0)
        for _ in range(1500):
            w = random_word(rng)
            got = normalize(w)
            assert is_normal_form(got), (w, got)
            assert phi(got) == phi(w), (w, got)

    def test_not_length_reducing_in_general(self):
        # growth is allowed; check one case that grows
        w = word(6, [(1, 2), (3, 4), (5, 6), (3, 5)])
        got = normalize(w)
        assert len(got) > len(w)
        assert is_normal_form(got) and phi(got) == phi(w)

    def test_normal_form_predicate_rejects(self):
        assert not is_normal_form(word(5, [(1, 2), (3, 4), (1, 3)]))


class TestStandardIdempotent:
    def test_two_pairs(self):
        w = standard_idempotent(4, [(1, 2), (3, 4)])
        assert w == word(4, [(1, 2), (3, 4)])
        img = phi(w)
        assert multiply(img, img) == img

    def test_single_pair(self):
        assert standard_idempotent(2, [(1, 2)]) == word(2, [(1, 2)])

    def test_overlap_rejected(self):
        with pytest.raises(DomainError):
            standard_idempotent(4, [(1, 2), (2, 3)])

    def test_each_l_class_has_one_standard_idempotent(self):
        # n=5: every singular diagram is L-related to exactly one of them
        n = 5
        images = {}
        for size in (1, 2):
            for pairs in itertools.combinations(itertools.combinations(range(1, n + 1), 2), size):
                flat = [x for p in pairs for x in p]
                if len(set(flat)) != len(flat):
                    continue
                images[pairs] = phi(standard_idempotent(n, pairs)).right_brackets()
        for d in enumerate_all(n):
            if d.corank == 0:
                continue
            matches = [p for p, rb in images.items() if rb == d.right_brackets()]
            assert len(matches) == 1


class TestGamma:
    def test_unfolds_definition(self):
        assert gamma(4, 3) == word(4, [(1, 2), (1, 3), (1, 4), (1, 2)])

    def test_square_is_base_pair(self):
        for n in (4, 5, 6):
            for i in range(3, n):
                g = gamma(n, i)
                assert phi(Word(n, g.quarks * 2)) == phi(word(n, [(1, 2)]))

    def test_braid_and_commute(self):
        for n in (5, 6):
            for i in range(3, n):
                for j in range(3, n):
                    gi, gj = gamma(n, i), gamma(n, j)
                    if abs(i - j) == 1:
                        assert phi(Word(n, gi.quarks + gj.quarks + gi.quarks)) == phi(
                            Word(n, gj.quarks + gi.quarks + gj.quarks)
                        )
                    elif abs(i - j) > 1:
                        assert phi(Word(n, gi.quarks + gj.quarks)) == phi(
                            Word(n, gj.quarks + gi.quarks)
                        )

    def test_range_checked(self):
        with pytest.raises(DomainError):
            gamma(4, 2)
        with pytest.raises(DomainError):
            gamma(4, 4)
        with pytest.raises(DomainError):
            gamma(3, 3)


class TestCheckAllRelations:
    def test_n4_all_pass(self):
        report = check_all_relations(4)
        assert report.ok
        assert all(report.checked[r] > 0 for r in ("R1", "R2", "R3", "R4", "R5", "R6", "R7"))

    def test_n3_applicable_subset(self):
        report = check_all_relations(3)
        assert report.ok
        assert report.checked["R1"] == 6 and report.checked["R2"] == 6
        assert report.checked["R4"] == 6 and report.checked["R5"] == 6
        assert report.checked["R3"] == 0  # needs four distinct indices
        assert report.checked["R6"] == 0 and report.checked["R7"] == 0


class TestWordText:
    def test_round_trip(self):
        w = word(5, [(1, 2), (2, 3), (1, 2)])
        assert word_to_text(w) == "n=5: (1,2)(2,3)(1,2)"
        assert parse_word(word_to_text(w)) == w

    def test_parse_rejects_garbage(self):
        for bad in ["", "n=3 (1,2)", "n=3: ", "n=3: (1,2) junk", "(1,2)"]:
            with pytest.raises(DomainError):
                parse_word(bad)
