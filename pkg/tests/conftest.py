from __future__ import annotations

from pathlib import Path

import pytest

from comdrift import Snapshot
from comdrift.cli import main as cli_main

DATA_DIR = Path(__file__).parent / "data"

# Hand-derived reference values for the four-member fixture:
#   X = {a, b, c, d} at t=1; at t=2 a,b -> P, c -> Q, d gone.
#   eta = 1/4, dist over (P, Q) = (2/3, 1/3), m = 2
#   entropy = -(2/3)log2(2/3) - (1/3)log2(1/3) = 0.9182958340544896
#   split  = 0.75 * entropy                    = 0.6887218755408672
#   shrink = 0.25 * (1 - split)                = 0.07781953111478321
FOUR_MEMBER_SPLIT = 0.6887218755408672
FOUR_MEMBER_SHRINK = 0.07781953111478321
FOUR_MEMBER_ENTROPY = 0.9182958340544896


@pytest.fixture
def four_member_pair() -> tuple[Snapshot, Snapshot]:
    prev = Snapshot(time=1, assignment={"a": "X", "b": "X", "c": "X", "d": "X"})
    nxt = Snapshot(time=2, assignment={"a": "P", "b": "P", "c": "Q"})
    return prev, nxt


@pytest.fixture
def four_member_csv() -> Path:
    return DATA_DIR / "four_member.csv"


def run_cli(argv: list[str], capsys) -> tuple[int, str, str]:
    """Run the CLI in-process, returning (exit_code, stdout, stderr)."""
    try:
        code = cli_main(argv)
    except SystemExit as exc:  # argparse usage errors
        code = exc.code if isinstance(exc.code, int) else 2
    captured = capsys.readouterr()
    return code, captured.out, captured.err
