from setuptools import setup, find_packages

setup(
    name="omega_lyndon",
    version="1.0.0",
    description="omega-Lyndon words, positional orders and factorization of eventually periodic words",
    packages=find_packages(exclude=["tests", "tests.*", "examples", "examples.*"]),
    python_requires=">=3.9",
    install_requires=[
        "numpy>=1.24.0",
        "loguru>=0.7.2",
        "python-dotenv>=1.0.0",
        "tqdm>=4.66.0",
    ],
    entry_points={"console_scripts": ["omega-lyndon = services.cli:main"]},
)
