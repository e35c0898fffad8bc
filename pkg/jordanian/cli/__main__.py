"""
Jordanian CLI entry point
"""

if __name__ == '__main__':
    from .main import cli
    cli()
