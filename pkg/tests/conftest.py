"""Shared fixtures: the generated test corpus is expensive, so build it once."""

import pytest

from holoreg import (CGroupPresentation, cgroup_group, corpus_representatives,
                     generate_corpus)


@pytest.fixture(scope="session")
def corpus():
    """All corpus entries, duplicates marked."""
    return generate_corpus()


@pytest.fixture(scope="session")
def corpus_reps(corpus):
    return corpus_representatives(corpus)


@pytest.fixture(scope="session")
def cgroup_test_presentations():
    """Small presentations covering the trivial, abelian, odd, and even cases."""
    return [
        CGroupPresentation(1, 1, 1),
        CGroupPresentation(5, 1, 1),
        CGroupPresentation(6, 1, 1),
        CGroupPresentation(3, 2, 2),    # symmetric group on 3 points
        CGroupPresentation(7, 3, 2),    # nonabelian of order 21
        CGroupPresentation(7, 3, 4),
        CGroupPresentation(5, 4, 2),    # even order, order of k is 4
        CGroupPresentation(7, 2, 6),    # dihedral of order 14
        CGroupPresentation(9, 2, 8),
        CGroupPresentation(21, 1, 1),
        CGroupPresentation(7, 6, 3),    # ord_7(3) = 6
        CGroupPresentation(13, 3, 3),   # ord_13(3) = 3
        CGroupPresentation(7, 9, 2),    # ord_7(2) = 3 < 9, psi family nontrivial
    ]


@pytest.fixture(scope="session")
def cgroup_test_groups(cgroup_test_presentations):
    return [(p, cgroup_group(p)) for p in cgroup_test_presentations]
