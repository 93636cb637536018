"""
Setup file.
"""

from setuptools import setup

KEYWORDS = "HOMFLY torus links Hecke algebra"


if __name__ == "__main__":
    setup(
        keywords=KEYWORDS,
        include_package_data=True,
    )
