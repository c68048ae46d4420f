from setuptools import setup, find_packages

setup(
    name='lieschur',
    version='0.1.0',
    description='Exact Schur multipliers and multiplier bounds for finite-dimensional nilpotent Lie algebras',
    long_description=open('README.md').read(),
    long_description_content_type='text/markdown',
    packages=find_packages(exclude=['tests', 'examples', 'examples.*']),
    include_package_data=True,
    package_data={'lieschur.catalog': ['data/*.json']},
    install_requires=[
        'numpy>=2.0.1',
        'pandas>=2.2.2',
        'line_profiler>=4.1.3',
        'psutil>=5.9.0'
    ],
    extras_require={'test': ['pytest>=7.0']},
    entry_points={'console_scripts': ['lieschur=lieschur.cli:main']},
    python_requires='>=3.9',
)
