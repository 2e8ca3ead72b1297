from setuptools import setup, find_packages

ver = {}
try:
    with open('Utilities/_version.py') as fd:
        exec(fd.read(), ver)
    version = ver.get('__version__', 'dev')
except IOError:
    version = 'dev'

with open('README.md') as fp:
    long_description = fp.read()

CLASSIFIERS = """
Development Status :: 3 - Alpha
Intended Audience :: Science/Research
Intended Audience :: Developers
License :: OSI Approved :: BSD License
Programming Language :: Python :: 3
Programming Language :: Python :: 3.8
Programming Language :: Python :: 3.9
Programming Language :: Python :: 3.10
Programming Language :: Python :: 3.11
Topic :: Scientific/Engineering :: Mathematics
Topic :: Scientific/Engineering :: Physics
Operating System :: POSIX
Operating System :: Unix
Operating System :: MacOS
"""

subpackages = find_packages(exclude=['Tests', 'Tests.*', 'examples', 'examples.*'])

setup(
    name='HillBandPy',
    version=version,
    author='Lekan Molu',
    description='Band and gap spectra of Hill operators with H^{-1} periodic potentials',
    long_description=long_description,
    long_description_content_type='text/markdown',
    package_dir={'HillBandPy': '.'},
    packages=['HillBandPy'] + [f'HillBandPy.{p}' for p in subpackages],
    classifiers=[f for f in CLASSIFIERS.split('\n') if f],
    python_requires='>=3.8',
    install_requires=['numpy',
                      'scipy>=1.9'],
    extras_require={
       'test': ['pytest', 'pytest-timeout', 'hypothesis'],
    },
    entry_points={
        'console_scripts': ['hillband=HillBandPy.CLI.command_line:main'],
    },
)
