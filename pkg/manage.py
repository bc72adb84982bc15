#!/usr/bin/env python
import sys


def main() -> None:
    try:
        from schublas.core.controller.cli import run_cli
    except ImportError as exc:
        raise ImportError(
            "Couldn't import schublas. Are the requirements installed and "
            "is the repository root on your PYTHONPATH?"
        ) from exc
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
