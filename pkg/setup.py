from setuptools import setup, find_packages

setup(
    name="arthurkit",
    version="1.0.0",
    description="Combinatorial calculator for Arthur parameters, endoscopy and nilpotent orbits",
    author="Your Name",
    packages=find_packages(exclude=["examples", "examples.*"]),
    install_requires=[
        "pandas>=2.1.4",
        "jsonschema>=4.21.1",
        "python-dotenv>=1.0.0",
        "pyyaml>=6.0.1",
        "loguru>=0.7.2",
        "jinja2>=3.1.3"
    ],
    extras_require={
        "dev": ["pytest>=8.0.0", "black>=24.1.1", "sympy>=1.12"]
    },
    python_requires=">=3.9",
    scripts=[
        "arthurkit.py"
    ],
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
    ],
)
