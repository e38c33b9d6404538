# -*- coding: utf-8 -*-
#
# Copyright © 2016 The mu-bose authors
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE. See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program. If not, see <http://www.gnu.org/licenses/>.

import setuptools

REQUIRES = ["marshmallow<4", "marshmallow-enum"]

args = dict(
    name="mu-bose",
    version="0.1",
    author="The mu-bose authors",
    description="μ-calculus and thermodynamics of the μ-deformed Bose gas",
    keywords="bose gas deformed calculus polylogarithm virial",
    license="GPL-3.0+",
    packages=setuptools.find_packages(exclude=["tests"]),
    python_requires=">=3.9",
    entry_points={
        "console_scripts": [
            "mu-bose = mubose.__main__:main"
        ]
    },
    install_requires=["PyYAML", "numpy", "scipy"] + REQUIRES,
    extras_require={
        "test": ["hypothesis"]
    },
    tests_require=["hypothesis"],
    test_suite="tests",
    classifiers=[
        "Development Status :: 2 - Pre-Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: GNU General Public License v3 or later (GPLv3+)",
        "Operating System :: OS Independent",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3 :: Only",
        "Topic :: Scientific/Engineering :: Physics",
        "Topic :: Utilities",
    ])

if __name__ == "__main__":
    setuptools.setup(**args)
