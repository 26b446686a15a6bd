# Thin wrapper so the tool runs from a checkout without installing it.
from rcftkit.main import main

if __name__ == "__main__":
    raise SystemExit(main())
