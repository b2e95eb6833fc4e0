from setuptools import find_packages, setup

setup(
    name='pytransdiam',
    version='0.1.0',
    packages=find_packages(exclude=['tests', 'tests.*']),
    install_requires=[
        'numpy>=1.22',
        'scipy>=1.9',
        'pandas>=1.4',
        'joblib>=1.1',
        'sympy>=1.10',
    ],
    entry_points={
        'console_scripts': ['pytransdiam = pytransdiam.cli.main:main'],
    },
    python_requires='>=3.8',
    license='MIT',
    description='Transfinite diameters of preimages under polynomial maps: '
                'Fekete point search, multivariate resultants, escape rates '
                'and the ultrametric analogue'
)
