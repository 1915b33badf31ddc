from setuptools import find_packages, setup

setup(
    name='src',
    packages=find_packages(exclude=['tests']),
    version='0.1.0',
    description='mSGD: stochastic gradient descent for linear systems with missing data',
    author='',
    license='MIT',
    python_requires='>=3.8',
    install_requires=[
        "pandas>=1.5",
        "click>=8.0",
        "numpy>=1.20",
        "scipy>=1.6",
        "tqdm>=4.60",
    ],
    extras_require={
        "test": ["pytest>=7.0"],
        "docs": ["sphinx>=4.0.2", "sphinx_rtd_theme", "recommonmark"],
    },
    entry_points={
        "console_scripts": ["msgd=src.cli:main"],
    },
)
