import pytest

from pfms import multiset_from_values


@pytest.fixture
def convex_ms():
    """Three-node, depth-1 instance whose channels are all well shaped:
    positive and neutral rise then fall, negative falls then rises."""
    return multiset_from_values(
        (0.0, 1.0, 2.0),
        [
            [[0.2, 0.1, 0.5]],
            [[0.6, 0.2, 0.1]],
            [[0.3, 0.1, 0.4]],
        ],
    )


@pytest.fixture
def bimodal_ms():
    """Twin-peaked positive channel (0.6, 0.1, 0.5): the standard
    non-convex fixture and the source of the hull membership gap."""
    return multiset_from_values(
        (0.0, 1.0, 2.0),
        [
            [[0.6, 0.1, 0.2]],
            [[0.1, 0.2, 0.1]],
            [[0.5, 0.1, 0.3]],
        ],
    )


@pytest.fixture
def deep_ms():
    """Two nodes, two levels; positive channel ordered across levels."""
    return multiset_from_values(
        (0.0, 1.0),
        [
            [[0.7, 0.1, 0.1], [0.4, 0.3, 0.2]],
            [[0.5, 0.2, 0.2], [0.2, 0.1, 0.6]],
        ],
    )
