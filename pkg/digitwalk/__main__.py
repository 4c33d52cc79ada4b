import logging
import sys

from .modules import create_app


def main(argv=None):
    logging.basicConfig(stream=sys.stderr, level=logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    return create_app().run(argv)


if __name__ == "__main__":
    sys.exit(main())
