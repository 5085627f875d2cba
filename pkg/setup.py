from setuptools import setup, find_packages

with open("README.md", "r") as source:
    long_description = source.read()

setup(
    name="arfkit",
    version='0.1.0',
    description="Arf and Brown invariants, lattice signatures and Rochlin congruences",
    long_description=long_description,
    long_description_content_type="text/markdown",

    packages=find_packages(exclude=["tests", "tests.*"]),

    install_requires=[
        'appdirs~=1.4.3',
        'attrs>=19.2.0',
        'click>=7.0',
        'colorama>=0.3.9',
        'jsonschema>=2.6.0',
        'numpy>=1.17',
        'smokesignal>=0.7.0',
        'sympy>=1.9'
    ],

    tests_require=[
        'mock>=2.0.0',
        'pytest>=4.6'
    ],

    python_requires=">=3.6",

    classifiers = [
        "Development Status :: 4 - Beta",
        "Environment :: Console",
        "Intended Audience :: Science/Research",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],

    package_dir={'arfkit': 'arfkit'},
    package_data={'arfkit': ['schemas/*.json']},
    include_package_data=True,

    entry_points={
        'console_scripts': [
            'arfkit = arfkit.__main__:main',
        ],
    },
)
