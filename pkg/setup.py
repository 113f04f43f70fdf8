import re

from setuptools import find_packages, setup

with open("README.md", "r") as readme:
    long_description = readme.read()

with open("pyabel/__init__.py", "r") as init:
    version = re.match(r'.*__version__ = "(.*?)"', init.read(), re.S).group(1)

setup(
    name="pyabel",
    version=version,
    description="Exact structure computations for divisible and finitely presented abelian groups.",
    long_description=long_description,
    long_description_content_type="text/markdown",
    license="BSD",
    packages=find_packages(exclude=["examples", "examples.*"]),
    package_data={"pyabel": ["config/*.json"]},
    include_package_data=True,
    python_requires=">=3.9",
    install_requires=["sympy>=1.9", "typer>=0.4"],
    extras_require={"test": ["hypothesis>=6.0"]},
    entry_points={"console_scripts": ["pyabel=pyabel.cli:main"]},
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: BSD License",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)
