from os.path import exists

from setuptools import find_packages, setup

setup(
    name="py-trop-realize",
    author="tropreal developers",
    packages=find_packages(exclude=["tests", "tests.*"]),
    scripts=[],
    license="MIT",
    description="Relative realizability of tropical curves in tropical planes.",
    long_description=open("README.md").read() if exists("README.md") else "",
    long_description_content_type="text/markdown",
    classifiers=[
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.9",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    install_requires=[
        "sympy", "eventlet"
    ],
    extras_require={"svg": ["matplotlib"]},
    entry_points={"console_scripts": ["tropreal=tropreal.cli:main"]},
    version="0.1.0",
    zip_safe=False,
)
