from rich.traceback import install

from src.cli import entry_point

install(show_locals=True)


if __name__ == "__main__":
    entry_point()
