"""Build script for scckit."""

import setuptools


def get_version():
    """Return the first line of version.txt."""
    with open('version.txt') as fp:
        version = fp.readline().strip()
    if not version:
        raise ValueError('No version number in version.txt')
    return version


with open("README.rst") as fp:
    LONG_DESCRIPTION = fp.read()


setuptools.setup(
    name='scckit',
    version=get_version(),
    license='LGPLv3',
    description='Strong components of directed graphs in linear time',
    long_description=LONG_DESCRIPTION,
    packages=setuptools.find_packages(exclude=['tests', 'tests.*']),
    entry_points={
        'console_scripts': [
            'scckit=scckit.__main__:main',
        ],
    },
    python_requires='>=3.8',
    install_requires=[
        'Logbook >=1.5',
        'pyyaml',
        'voluptuous >=0.10',
    ],
    classifiers=[
        'Development Status :: 4 - Beta',
        'License :: '
        'OSI Approved :: GNU Lesser General Public License v3 (LGPLv3)',
        'Topic :: Scientific/Engineering :: Mathematics',
        'Programming Language :: Python :: 3 :: Only',
        'Programming Language :: Python :: 3.8',
    ],
    keywords='graph strong components depth-first search tarjan',
)
