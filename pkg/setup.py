from setuptools import setup, find_packages

# Read the contents of README.md
with open('README.md', encoding='utf-8') as f:
    long_description = f.read()

setup(
    name="hyperoct",
    version="0.1.0",
    packages=find_packages(exclude=["tests"]),
    include_package_data=True,
    install_requires=[
        "numpy",  # Signed permutation matrices, batched rank over F_q
        "sympy",  # Primality of the field size
    ],
    extras_require={
        "test": ["pytest", "hypothesis"],
    },
    entry_points={
        "console_scripts": [
            "hyperoct=hyperoct.__main__:main",
        ],
    },
    package_data={
        "": ["resources/*.json"],
    },
    author="V",
    author_email="V_@smth.com",
    description="Exhaustive checks of signed generating functions on the hyperoctahedral group",
    long_description=long_description,
    long_description_content_type="text/markdown",
    keywords="combinatorics, coxeter groups, signed permutations, generating functions",
    python_requires=">=3.8",
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)
