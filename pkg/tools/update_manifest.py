"""Rewrite the checksum manifest of the bundled catalog after editing an entry file."""

import sys

from liepoisson.catalog.entry import DATA_DIR, check_manifest, write_manifest


def main():
    stale = check_manifest(DATA_DIR)
    n = write_manifest(DATA_DIR)
    print(f"{n} files listed; updated: {', '.join(stale) if stale else 'none'}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
