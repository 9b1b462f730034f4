# MIT License: Copyright (c) 2026, the vtlink developers.
# See the LICENSE file in the root directory for full license text.


def random_order(rng, smallest=1, mean=5, largest=8):
    """Generate a random graph order.

    Use a Poisson distribution since it is discrete and centered around the mean, clipped
    to ``largest`` so brute-force oracles stay cheap.
    """
    if smallest >= mean:
        raise ValueError("smallest must be less than mean.")
    return int(min(smallest + rng.poisson(mean - smallest), largest))
