import sys

from src.ui.cli import run


def start():
    sys.exit(run(sys.argv[1:]))


if __name__ == '__main__':
    start()
