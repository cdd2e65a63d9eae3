from setuptools import setup, find_packages

setup(
    name="toeplitz-truncation",
    version="0.1.0",
    packages=find_packages(include=["src", "src.*"]),
    python_requires=">=3.9",
    install_requires=[
        # Numerics
        "numpy>=1.24.0",
        "scipy>=1.10.0",
        "pandas>=2.2.0",

        # Records and configuration
        "pydantic>=2.0",
        "python-dotenv>=1.0.0",

        # Progress reporting
        "tqdm>=4.66.0",
    ],
    extras_require={
        "dev": [
            "pytest>=7.0.0",
            "black>=22.0.0",
            "isort>=5.12.0",
            "flake8>=5.0.0",
            "mypy>=0.991",
        ]
    },
    entry_points={
        "console_scripts": ["toeplitz-truncation=src.cli:main"],
    },
)
