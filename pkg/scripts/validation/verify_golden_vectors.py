import io

from digit_ecc.a2_codec import tight_pair
from digit_ecc.cli import main

# (argv, stdin line, exact stdout line)
CASES = [
    (["encode", "--family", "prototype", "--p", "3", "--r", "3"],
     "20111020010201200120012", "122001110220010201200120012"),
    (["decode", "--family", "prototype", "--p", "3", "--r", "3"],
     "122001120220010201200120012", "CORRECTED 122001110220010201200120012 021:-1"),
    (["encode", "--family", "a1", "--r", "3"], "0211112102", "2002011112102"),
    (["decode", "--family", "a1", "--r", "3"], "2002011102102", "CORRECTED 2002011112102 111:-2"),
    (["encode", "--family", "a2", "--r", "4"], "0211001022101122", "2020211001022210112220"),
    (["encode", "--family", "golay"], "012210", "10122012210"),
    (["decode", "--family", "golay", "--show-syndromes"],
     "10122012222", "CORRECTED 10122012210 22110:-1,22222:-2 P_all=00221"),
]


def run_case(argv, line):
    out, err = io.StringIO(), io.StringIO()
    code = main(argv + ["--strict", "--quiet"], stdin=io.StringIO(line + "\n"), stdout=out, stderr=err)
    assert code == 0, f"{' '.join(argv)} exited {code}: {err.getvalue()}"
    return out.getvalue().strip()


def verify_cli_cases():
    print("Running worked examples through the CLI...")
    for argv, line, expected in CASES:
        got = run_case(argv, line)
        print(f"  {' '.join(argv)}: {line} -> {got}")
        assert got == expected, f"expected {expected}"
    print("✅ Worked examples match")


def verify_a2_double_error():
    # +1 at 1101 and +2 at O on the worked A2 codeword
    got = run_case(["decode", "--family", "a2", "--r", "4", "--show-syndromes"], "2020211001020210112210")
    print(f"A2 double error: {got}")
    assert got.startswith("MULTI ")
    assert got.endswith("P1=0 P2=0 P_all=1101")
    print("✅ Double error detected")


def verify_tight_pair():
    x, y = tight_pair()
    print(f"Tight pair: {x} / {y} distance {x.distance_to(y)}")
    assert x.distance_to(y) == 4
    print("✅ Minimum distance is reached")


def verify_table():
    out = io.StringIO()
    assert main(["table"], stdout=out, stderr=io.StringIO()) == 0
    rows = out.getvalue().splitlines()[1:]
    print("\n".join(rows))
    assert [int(row.split()[1]) for row in rows] == [4, 10, 20, 41, 91, 182, 372]
    print("✅ Family sizes match")


if __name__ == "__main__":
    verify_cli_cases()
    verify_a2_double_error()
    verify_tight_pair()
    verify_table()
