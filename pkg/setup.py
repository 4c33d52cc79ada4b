from setuptools import setup, find_packages

setup(
    name='digitwalk',
    version='0.1.0',
    description='Lattice walks steered by the digits of rationals: closure, drift, winding, torsion and digit surgery',
    license='MIT',
    packages=find_packages(exclude=["tests"]),
    python_requires='>=3.8',
    install_requires=[
        "ujson>=5.0",
        "msgpack>=1.0.0",
        "svgwrite>=1.4"
    ],
    extras_require={
        "test": ["pytest>=7.0"]
    },
    entry_points={
        "console_scripts": ["digitwalk=digitwalk.__main__:main"]
    }
)
