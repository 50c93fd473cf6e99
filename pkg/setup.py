# setup.py

from setuptools import setup, find_packages

setup(
    name="visorlab",
    version="0.1.0",
    description="Geometry of the Knight's Visor pop-up card",
    package_dir={"": "src"},
    packages=find_packages(where="src"),
    python_requires=">=3.9",
    install_requires=[
        "numpy",
        "scipy",
        "pandas",
        "matplotlib",
        "rich",
        "python-dotenv",
    ],
    entry_points={"console_scripts": ["visorlab = pipeline.cli:main"]},
)
