"""Scaling of the Radon-match count on the dense side.

For each n the script samples complexes and random configurations,
estimates the number of matching (2d+2)-subsets, and fits the log-log slope
against the predicted exponent 2(d+1 - alpha . v_{d+1}).  It also prints the
ratio of the estimate to the bare power n^exponent, i.e. the constant in
front, which the asymptotic statement leaves open.
"""

import argparse
import math

import numpy as np

from embedthresh.complex import AlphaVector, sample_complex
from embedthresh.geometry import random_configuration
from embedthresh.radon_match import sample_radon_matches
from embedthresh.sweep import derive_seed
from embedthresh.thresholds import face_exponent


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--d", type=int, default=1)
    ap.add_argument("--alpha", default="0.7")
    ap.add_argument("--sizes", default="50,100,200,400")
    ap.add_argument("--complexes", type=int, default=10)
    ap.add_argument("--samples", type=int, default=20000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    alpha = AlphaVector.parse(args.alpha)
    d = args.d
    expo = 2 * face_exponent(d + 1, alpha)
    sizes = [int(s) for s in args.sizes.split(",")]
    means = []
    print(f"predicted exponent {expo:.3f}")
    print("n,mean_estimate,ratio_to_power")
    for i, n in enumerate(sizes):
        ests = []
        for t in range(args.complexes):
            X = sample_complex(n, alpha, d, derive_seed(args.seed, i, t))
            cfg = random_configuration(n, 2 * d, 2 ** 31, derive_seed(args.seed, i, t, 1))
            ests.append(sample_radon_matches(X, cfg, d, args.samples,
                                             derive_seed(args.seed, i, t, 2)).estimate)
        mean = math.fsum(ests) / len(ests)
        means.append(mean)
        print(f"{n},{mean:.6g},{mean / n ** expo:.4g}")
    slope = np.polyfit(np.log(sizes), np.log(means), 1)[0]
    print(f"fitted slope {slope:.3f} (predicted {expo:.3f})")


if __name__ == "__main__":
    main()
