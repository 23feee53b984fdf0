import re
import io
from setuptools import setup

# dfphoton imports numpy so read the meta data instead of importing it
with io.open('dfphoton/__init__.py', encoding='utf-8') as f:
    meta = dict(re.findall(r"^__(version|author)__ = '([^']*)'", f.read(), re.M))

with io.open('README.rst', encoding='utf-8') as f:
    long_description = f.read()

setup(
    name="dfphoton",
    version=meta['version'],
    description=(
        "Simulator for decoherence-free quantum information processing "
        "with four photons"),
    long_description=long_description,
    author=meta['author'],
    license="GPLv3",
    packages=['dfphoton'],
    install_requires=[
        'numpy>=1.17',
        'scipy>=1.4',
    ],
    classifiers=[
        "Environment :: Console",
        "Intended Audience :: Science/Research",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: GNU General Public License v3 (GPLv3)",
        "Topic :: Scientific/Engineering :: Physics",
    ],
    provides=['dfphoton'],
    entry_points = {
        'console_scripts': [
            'dfphoton = dfphoton.__main__:main'
        ],
    },
    test_suite = "tests",
)
