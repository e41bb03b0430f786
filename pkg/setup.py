from setuptools import setup, find_packages

setup(
    name="cliffordlab",
    version="0.1.0",
    packages=find_packages(include=["src", "src.*", "config", "config.*"]),
    python_requires=">=3.10",
    install_requires=[
        line.strip()
        for line in open("requirements/base.txt")
        if line.strip() and not line.startswith("#") and not line.startswith("-r")
    ],
    entry_points={
        "console_scripts": [
            "cliffordlab=src.cli.main:main",
        ],
    },
)
