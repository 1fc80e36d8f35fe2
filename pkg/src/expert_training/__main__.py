import sys

from expert_training.app import App
from expert_training.utils import configure_logging, log_banner


def main():
    configure_logging()
    log_banner()

    sys.exit(App().run(sys.argv[1:]))


if __name__ == "__main__":
    main()
