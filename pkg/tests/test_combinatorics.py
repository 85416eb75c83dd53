import itertools

from colorblocks.combinatorics import (
    binomial,
    partition_count,
    partitions_at_most_k_parts,
    stirling2,
)


def set_partitions_into(n, blocks):
    """Brute-force count of partitions of {0..n-1} into exactly `blocks` parts."""
    if n == 0:
        return 1 if blocks == 0 else 0
    count = 0
    # assign each element a block label; count canonical labelings only
    for labels in itertools.product(range(blocks), repeat=n):
        if max(labels) != blocks - 1:
            continue
        seen = {}
        ok = True
        for lab in labels:
            if lab not in seen:
                if lab != len(seen):  # labels must first appear in order
                    ok = False
                    break
                seen[lab] = True
        if ok:
            count += 1
    return count


def test_stirling_examples():
    assert stirling2(4, 2) == 7
    assert stirling2(4, 2) == set_partitions_into(4, 2)
    assert stirling2(0, 0) == 1
    assert stirling2(5, 5) == 1
    assert stirling2(3, 0) == 0
    assert stirling2(2, 5) == 0


def test_stirling_against_enumeration():
    for n in range(6):
        for i in range(n + 1):
            assert stirling2(n, i) == set_partitions_into(n, i)


def test_stirling_row_sums_are_bell_numbers():
    bell = [1]
    for n in range(10):
        bell.append(sum(binomial(n, j) * bell[j] for j in range(n + 1)))
    for n in range(11):
        assert sum(stirling2(n, i) for i in range(n + 1)) == bell[n]


def test_binomial_symmetry():
    for n in range(12):
        for r in range(n + 1):
            assert binomial(n, r) == binomial(n, n - r)
    assert binomial(5, -1) == 0
    assert binomial(5, 6) == 0


def test_partition_count_small():
    assert [partition_count(n) for n in range(4)] == [1, 1, 2, 3]
    assert partition_count(4) == 5
    assert partition_count(10) == 42


def test_partitions_at_most_k_parts_examples():
    assert partitions_at_most_k_parts(4, 2) == [(4,), (3, 1), (2, 2)]
    assert partitions_at_most_k_parts(0, 3) == [()]
    assert sorted(partitions_at_most_k_parts(3, 3)) == [(1, 1, 1), (2, 1), (3,)]


def test_partitions_shape():
    for m in range(8):
        for k in range(1, 6):
            for parts in partitions_at_most_k_parts(m, k):
                assert sum(parts) == m
                assert len(parts) <= k
                assert all(p >= 1 for p in parts)
                assert list(parts) == sorted(parts, reverse=True)


def test_unrestricted_partitions_match_partition_count():
    for m in range(21):
        assert len(partitions_at_most_k_parts(m, max(m, 1))) == partition_count(m)


def test_gaussian_binomial_counts_classes():
    # coefficient of q^m in the q-binomial (m+k choose k)_q equals the number
    # of partitions of m into at most k parts
    def q_binomial(n, k):
        # DP on the recurrence [n,k]_q = [n-1,k-1]_q + q^k [n-1,k]_q
        table = {}
        for nn in range(n + 1):
            for kk in range(min(nn, k) + 1):
                if kk == 0 or kk == nn:
                    table[(nn, kk)] = [1]
                    continue
                a = table[(nn - 1, kk - 1)]
                b = table.get((nn - 1, kk), [0])
                out = [0] * max(len(a), len(b) + kk)
                for i, c in enumerate(a):
                    out[i] += c
                for i, c in enumerate(b):
                    out[i + kk] += c
                table[(nn, kk)] = out
        return table[(n, k)]

    for m in range(9):
        for k in range(1, 5):
            coeffs = q_binomial(m + k, k)
            want = coeffs[m] if m < len(coeffs) else 0
            assert len(partitions_at_most_k_parts(m, k)) == want
