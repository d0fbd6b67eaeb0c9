#!/usr/bin/env python3
"""Generates the stored interface-matrix fixtures from first principles.

This script is an independent route to the same matrices the library
generates: path polynomials come from direct subset enumeration, the 3x3
seed follows the max(i+j-1, 0) path pattern, and the scaled inverse seed is
written out explicitly and proven correct by multiplying it back against
the seed.  The 9x9 matrices are Kronecker squares (left factor most
significant).  Entries are written as "row col c0 c1 c2 ..." with ascending
coefficients.
"""

import argparse
import itertools
import os

# --- dense polynomial helpers (ascending coefficient lists) ---


def trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def padd(a, b):
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return trim(out)


def pmul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return trim(out)


def _dot(row, col):
    acc = []
    for x, y in zip(row, col):
        acc = padd(acc, pmul(x, y))
    return acc


def mat_mul(a, b):
    inner, cols = len(b), len(b[0])
    return [[_dot(row, [b[k][c] for k in range(inner)]) for c in range(cols)] for row in a]


def kron(a, b):
    br, bc = len(b), len(b[0])
    out = [[None] * (len(a[0]) * bc) for _ in range(len(a) * br)]
    for ia, ja in itertools.product(range(len(a)), range(len(a[0]))):
        for ib, jb in itertools.product(range(br), range(bc)):
            out[ia * br + ib][ja * bc + jb] = pmul(a[ia][ja], b[ib][jb])
    return out


# --- domination polynomial of a path by enumeration ---


def path_poly(k):
    if k == 0:
        return [1]
    closed = [
        {v for v in (i - 1, i, i + 1) if 0 <= v < k} for i in range(k)
    ]
    counts = [0] * (k + 1)
    for mask in range(1 << k):
        chosen = [i for i in range(k) if mask >> i & 1]
        covered = set()
        for i in chosen:
            covered |= closed[i]
        if len(covered) == k:
            counts[len(chosen)] += 1
    return trim(counts)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--dir", default="fixtures", help="output directory")
    args = parser.parse_args()

    expected_paths = {0: [1], 1: [0, 1], 2: [0, 2, 1], 3: [0, 1, 3, 1]}
    for k, want in expected_paths.items():
        got = path_poly(k)
        assert got == want, f"path {k}: {got} != {want}"

    # 3x3 seed: entry (i, j) is the path polynomial on max(i+j-1, 0) vertices.
    seed = [[path_poly(max(i + j - 1, 0)) for j in range(3)] for i in range(3)]

    # Its inverse scaled by x (1+x)^2, which clears every denominator.
    x = [0, 1]
    one_plus_x = [1, 1]
    scale3 = pmul(x, pmul(one_plus_x, one_plus_x))
    inv_seed = [
        [[0, 0, 3, 1], [0, 1, 1], [0, -2]],
        [[0, 1, 1], [0, -1, -2, -1], [0, 1, 1]],
        [[0, -2], [0, 1, 1], [1, -1]],
    ]
    identity3 = [[scale3 if r == c else [] for c in range(3)] for r in range(3)]
    assert mat_mul(inv_seed, seed) == identity3, "scaled inverse seed is wrong"
    assert mat_mul(seed, inv_seed) == identity3, "scaled inverse seed is wrong"

    # Kronecker squares: the two-vertex interface.
    state_matrix = kron(seed, seed)
    scaled_inverse = kron(inv_seed, inv_seed)
    scale9 = pmul(scale3, scale3)
    identity9 = [[scale9 if r == c else [] for c in range(9)] for r in range(9)]
    assert mat_mul(scaled_inverse, state_matrix) == identity9, "9x9 inverse check failed"

    # Spot values: corners of both matrices.
    assert state_matrix[0][0] == [1]
    assert state_matrix[8][8] == pmul(path_poly(3), path_poly(3))
    assert scaled_inverse[0][0] == pmul([0, 0, 3, 1], [0, 0, 3, 1])  # x^4 (x+3)^2
    assert scaled_inverse[8][8] == [1, -2, 1]  # (x-1)^2

    os.makedirs(args.dir, exist_ok=True)
    files = [
        (
            "state_matrix_2.txt",
            state_matrix,
            "9x9 gluing matrix over the pair states of a two-vertex interface",
        ),
        (
            "state_matrix_2_inverse_scaled.txt",
            scaled_inverse,
            "inverse of the gluing matrix, scaled by x^2 (1+x)^4",
        ),
    ]
    for name, matrix, comment in files:
        path = os.path.join(args.dir, name)
        with open(path, "w") as out:
            out.write(f"# {comment}\n")
            out.write("# row col c0 c1 c2 ...  (ascending coefficients)\n")
            for r, row in enumerate(matrix):
                for c, poly in enumerate(row):
                    coeffs = poly if poly else [0]
                    out.write(f"{r} {c} " + " ".join(str(v) for v in coeffs) + "\n")
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
