"""Print the position layout and check matrix of a code, for eyeballing."""

import argparse

from digit_ecc.analysis_oracles import check_matrix_of
from digit_ecc.families import build_spec, normalize_family


def show(args):
    spec = build_spec(
        normalize_family(args.family), p=args.p, r=args.r, message_len=args.message_len,
        global_check=args.global_check,
    )
    print(f"{spec.label}  n={spec.n_block} k={spec.k_msg} d={spec.distance}")
    print("-" * 40)
    for slot, pos in enumerate(spec.active_positions):
        print(f"{slot:3d}  {pos.label:>10}  {pos.role.value}")
    if spec.banished:
        print(f"banished: {' '.join(pos.label for pos in spec.banished)}")

    matrix = check_matrix_of(spec)
    print(f"\ncheck matrix {matrix.shape[0]}x{matrix.shape[1]}")
    for label, row in zip(matrix.labels, matrix.rows):
        print(f"{label:>8}  {''.join(str(int(v)) for v in row)}")


if __name__ == "__main__":
    parser = argparse.ArgumentParser()
    parser.add_argument("family")
    parser.add_argument("--p", type=int, default=None)
    parser.add_argument("--r", type=int, default=None)
    parser.add_argument("--message-len", type=int, default=None)
    parser.add_argument("--global-check", action="store_true")
    show(parser.parse_args())
