import random

import pytest

from petalgrid.braid import (
    BraidWord,
    ascending_run,
    decompose_permutation_braid,
    delta,
    delta_power_conjugacy,
    descending_run,
    format_word,
    half_twist,
    induced_permutation,
    left_normal_form,
    parse_word,
    permutation_braid,
    round_trip,
    round_trip_product,
    sigma,
    split,
    subset_braid,
    tau,
    torus_conjugacy_witness,
    words_equal,
)
from petalgrid.perm import IndexSubset, Permutation, residue_perm


def random_permutation(rng, n):
    images = list(range(1, n + 1))
    rng.shuffle(images)
    return Permutation(tuple(images))


def test_named_braids():
    assert delta(5).letters == (4, 3, 2, 1)
    assert round_trip(6, 1).letters == ()
    assert round_trip(6, 4).letters == (3, 2, 1, 1, 2, 3)
    assert descending_run(6, 4).letters == (3, 2, 1)
    assert ascending_run(6, 4).letters == (1, 2, 3)
    assert half_twist(4).letters == (1, 2, 1, 3, 2, 1)
    with pytest.raises(ValueError):
        round_trip(4, 5)


def test_half_twist_as_run_products():
    for n in range(2, 8):
        descending = BraidWord.identity(n)
        for k in range(2, n + 1):
            descending = descending * descending_run(n, k)
        ascending = BraidWord.identity(n)
        for k in range(n, 1, -1):
            ascending = ascending * ascending_run(n, k)
        assert words_equal(descending, half_twist(n))
        assert words_equal(ascending, half_twist(n))


def test_induced_permutations():
    assert induced_permutation(delta(6)) == Permutation((6, 1, 2, 3, 4, 5))
    assert induced_permutation(half_twist(6)) == Permutation((6, 5, 4, 3, 2, 1))
    assert induced_permutation(BraidWord.identity(4)) == Permutation.identity(4)


def test_induced_permutation_is_homomorphic():
    rng = random.Random(3)
    for _ in range(100):
        n = rng.randint(2, 9)
        letters = lambda: tuple(
            rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(rng.randint(0, 12))
        )
        v, w = BraidWord(n, letters()), BraidWord(n, letters())
        assert induced_permutation(v * w) == induced_permutation(v) * induced_permutation(w)


def test_permutation_braid_basics():
    assert permutation_braid(Permutation.identity(5)).letters == ()
    word = permutation_braid(Permutation((3, 2, 1)))
    assert len(word) == 3
    assert words_equal(word, half_twist(3))
    p = Permutation((2, 4, 1, 3, 6, 5, 7))
    assert len(permutation_braid(p)) == 4 == p.inversions()
    assert induced_permutation(permutation_braid(p)) == p


def test_permutation_braid_roundtrip_randomized():
    rng = random.Random(7)
    for _ in range(500):
        p = random_permutation(rng, rng.randint(1, 10))
        w = permutation_braid(p)
        assert induced_permutation(w) == p
        assert len(w) == p.inversions()


def test_permutation_braid_no_double_crossings():
    rng = random.Random(17)
    for _ in range(200):
        p = random_permutation(rng, rng.randint(2, 10))
        word = permutation_braid(p)
        heights = list(range(p.n))  # heights[j] = strand currently at height j+1
        crossed = set()
        for g in word.letters:
            i = abs(g) - 1
            pair = frozenset((heights[i], heights[i + 1]))
            assert pair not in crossed, f"strands cross twice in braid of {p.images}"
            crossed.add(pair)
            heights[i], heights[i + 1] = heights[i + 1], heights[i]


def test_subset_braid_examples():
    a = IndexSubset.of(7, (2, 4, 6))
    b = IndexSubset.of(7, (1, 2, 5))
    assert subset_braid(a, b) == permutation_braid(Permutation((2, 4, 1, 3, 6, 5, 7)))
    assert subset_braid(a, a).letters == ()

    top = IndexSubset.of(7, (5, 6, 7))
    low = IndexSubset.of(7, (1, 2, 3))
    assert words_equal(subset_braid(top, a) * subset_braid(a, low), subset_braid(top, low))


def test_subset_braid_barred_is_negative_mirror():
    a = IndexSubset.of(6, (2, 5))
    b = IndexSubset.of(6, (3, 4))
    barred = subset_braid(a, b, barred=True)
    assert all(g < 0 for g in barred.letters)
    assert words_equal(barred * subset_braid(b, a), BraidWord.identity(6))


def test_split():
    assert split(sigma(2, 1), sigma(2, 1)).letters == (1, 3)
    assert split(BraidWord.identity(3), BraidWord.identity(4)) == BraidWord.identity(7)
    assert split(BraidWord(2, (-1,)), BraidWord(3, (2, -1))).letters == (-1, 4, -3)


def test_split_exchange_randomized():
    rng = random.Random(29)
    low = IndexSubset.of(7, (1, 2, 3))
    top = IndexSubset.of(7, (5, 6, 7))
    x = subset_braid(top, low)
    for _ in range(50):
        alpha = BraidWord(3, tuple(rng.choice((1, -1)) * rng.randint(1, 2) for _ in range(6)))
        beta = BraidWord(4, tuple(rng.choice((1, -1)) * rng.randint(1, 3) for _ in range(6)))
        assert words_equal(x * split(alpha, beta), split(beta, alpha) * x)


def test_tau():
    assert words_equal(tau(sigma(5, 1)), sigma(5, 2))
    assert tau(BraidWord.identity(4)) == BraidWord.identity(4)

    x3 = permutation_braid(residue_perm(7, 3))
    d = induced_permutation(delta(7))
    conjugated = permutation_braid(d.inverse() * residue_perm(7, 3) * d)
    assert words_equal(tau(x3), conjugated)


def test_left_normal_form_examples():
    nf = left_normal_form(BraidWord(3, (1, -1)))
    assert nf.delta_power == 0 and nf.factors == ()

    nf = left_normal_form(BraidWord(3, (1, 2, 1)))
    assert nf.delta_power == 1 and nf.factors == ()

    for n in range(3, 7):
        nf = left_normal_form(delta(n) ** n)
        assert nf.delta_power == 2 and nf.factors == ()


def test_words_equal_examples():
    assert words_equal(BraidWord(3, (1, 2, 1)), BraidWord(3, (2, 1, 2)))
    assert not words_equal(sigma(3, 1), sigma(3, 2))
    u_all = round_trip_product(IndexSubset.of(5, (2, 3, 4, 5)))
    assert words_equal(u_all, half_twist(5) ** 2)
    with pytest.raises(ValueError, match="index mismatch"):
        words_equal(sigma(3, 1), sigma(4, 1))


def test_normal_form_of_inverse_pairs():
    rng = random.Random(41)
    for _ in range(50):
        n = rng.randint(2, 8)
        w = BraidWord(
            n, tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(rng.randint(0, 20)))
        )
        assert left_normal_form(w * w.inverse()).is_trivial()


def test_words_equal_matches_bfs_oracle_small():
    from oracles import positive_words_agree_with_bfs

    for n in (3, 4):
        for length in range(1, 5):
            positive_words_agree_with_bfs(n, length)


def test_normal_form_reconstruction_roundtrip():
    rng = random.Random(83)
    for _ in range(100):
        n = rng.randint(2, 9)
        w = BraidWord(
            n, tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(rng.randint(0, 25)))
        )
        nf = left_normal_form(w)
        rebuilt = half_twist(n) ** nf.delta_power
        for f in nf.factors:
            rebuilt = rebuilt * permutation_braid(f)
        assert words_equal(w, rebuilt)
        assert left_normal_form(rebuilt) == nf


def test_equal_words_from_long_rewrite_chains():
    # Random chains of relation moves and free insertions build a visibly
    # different word for the same element; a trailing extra letter breaks it.
    rng = random.Random(71)
    for _ in range(100):
        n = rng.randint(3, 7)
        letters = [rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(rng.randint(1, 15))]
        derived = list(letters)
        for _ in range(50):
            move = rng.random()
            if move < 0.3:
                spot = rng.randint(0, len(derived))
                g = rng.choice((1, -1)) * rng.randint(1, n - 1)
                derived[spot:spot] = [g, -g]
            elif move < 0.6 and len(derived) >= 2:
                i = rng.randrange(len(derived) - 1)
                a, b = derived[i], derived[i + 1]
                if abs(abs(a) - abs(b)) >= 2:
                    derived[i], derived[i + 1] = b, a
            elif len(derived) >= 3:
                i = rng.randrange(len(derived) - 2)
                a, b, c = derived[i : i + 3]
                if a == c and abs(abs(a) - abs(b)) == 1 and (a > 0) == (b > 0):
                    derived[i : i + 3] = [b, a, b]
        w = BraidWord(n, tuple(letters))
        v = BraidWord(n, tuple(derived))
        assert words_equal(w, v)
        assert not words_equal(w, v * sigma(n, rng.randint(1, n - 1)))


def test_decompose_permutation_braid_examples():
    p = Permutation((6, 2, 4, 7, 3, 1, 5))
    p1, p2, a = decompose_permutation_braid(p, 3)
    assert a.members == (2, 5, 6)
    assert words_equal(p1, BraidWord(3, (1, 2)))
    assert words_equal(p2, BraidWord(4, (2, 3, 1)))
    low = IndexSubset.of(7, (1, 2, 3))
    assert words_equal(permutation_braid(p), split(p1, p2) * subset_braid(low, a))

    ident = Permutation.identity(6)
    p1, p2, a = decompose_permutation_braid(ident, 4)
    assert p1.letters == () and p2.letters == () and a.members == (1, 2, 3, 4)

    _, _, a = decompose_permutation_braid(residue_perm(7, 3), 2)
    assert a.members == (3, 5)


def test_decompose_permutation_braid_full_range():
    rng = random.Random(59)
    for _ in range(60):
        n = rng.randint(2, 9)
        p = random_permutation(rng, n)
        k = rng.randint(1, n)
        p1, p2, a = decompose_permutation_braid(p, k)
        low = IndexSubset.of(n, range(1, k + 1))
        assert words_equal(permutation_braid(p), split(p1, p2) * subset_braid(low, a))


def test_conjugacy_witnesses():
    w = torus_conjugacy_witness(7, 10)
    tail = round_trip(7, 3).letters + round_trip(7, 5).letters
    assert w.verified and w.rhs.letters[-len(tail) :] == tail

    w = torus_conjugacy_witness(7, 13)
    tail = tuple(
        g for k in (2, 3, 4, 5, 6) for g in round_trip(7, k).letters
    )
    assert w.verified and w.rhs.letters[-len(tail) :] == tail

    w = torus_conjugacy_witness(5, 6)
    assert w.verified and w.conjugator.letters == ()
    expected = delta(5) * round_trip_product(IndexSubset.of(5, (2, 3, 4, 5)))
    assert w.rhs == expected

    assert delta_power_conjugacy(7, 3).verified

    with pytest.raises(ValueError, match="not coprime"):
        torus_conjugacy_witness(4, 6)
    with pytest.raises(ValueError):
        torus_conjugacy_witness(5, 4)


def test_central_power_commutes():
    for n in range(2, 10):
        central = delta(n) ** n
        for i in range(1, n):
            assert words_equal(central * sigma(n, i), sigma(n, i) * central)


def test_delta_power_factorization_exhaustive():
    # delta^k = X_{T,L} (Delta_k^2 stacked under the identity), all 2 <= k <= n <= 9
    for n in range(2, 10):
        for k in range(2, n + 1):
            low = IndexSubset.of(n, range(1, k + 1))
            top = IndexSubset.of(n, range(n - k + 1, n + 1))
            twist = split(half_twist(k) ** 2, BraidWord.identity(n - k))
            assert words_equal(delta(n) ** k, subset_braid(top, low) * twist), (n, k)


def test_residue_commutator_is_pure_up_to_12():
    import math

    for n in range(3, 13):
        for k in range(2, n):
            if math.gcd(n, k) != 1:
                continue
            x = permutation_braid(residue_perm(n, k))
            alpha = tau(x).inverse() * delta(n) ** (k - 1) * x
            assert induced_permutation(alpha).is_identity(), (n, k)


def test_parse_and_format():
    w = parse_word(4, "s1 s2^-1 s1")
    assert w.letters == (1, -2, 1)
    assert format_word(w) == "s1 s2^-1 s1"
    assert format_word(BraidWord.identity(3)) == "<empty>"
    with pytest.raises(ValueError):
        parse_word(3, "s9")
    with pytest.raises(ValueError):
        parse_word(3, "x1")
