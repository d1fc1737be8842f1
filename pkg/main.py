import sys

from app import main
from app.utils.logger import logger

if __name__ == "__main__":
    logger.debug(f"odebench {' '.join(sys.argv[1:])}")
    sys.exit(main())
