from setuptools import setup, find_packages


setup(
    name='mutualvis',
    description='Exact mutual-visibility computations on small graphs',
    author='Andrew Crozier',
    author_email='wacrozier@gmail.com',
    classifiers=[
        'Programming Language :: Python :: 3',
    ],
    keywords='graph mutual-visibility moore-graph',
    packages=find_packages(exclude=['tests']),
    python_requires='>=3.10',
    install_requires=[
        'jsonschema'
    ],
    extras_require={
        'test': ['pytest', 'pytest-cov', 'pytest-mock', 'networkx>=3.2']
    },
    entry_points={
        'console_scripts': ['mutualvis = mutualvis.cli:main']
    }
)
