"""Allow package execution with python -m isohorn"""

from .main import main

if __name__ == "__main__":
    main()
