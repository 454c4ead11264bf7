import re
from setuptools import setup, find_namespace_packages
from os import path
from codecs import open

cur_dir = path.abspath(path.dirname(__file__))

with open(path.join(cur_dir, 'requirements.txt'), 'r') as f:
    requirements = f.read().split()

with open(path.join(cur_dir, 'theaetetus', 'powers', '_version.py'), 'r') as f:
    version = re.search(r'__version__ = "([^"]+)"', f.read()).group(1)

setup(
    name='theaetetus-powers',
    version=version,
    packages=find_namespace_packages(include=['theaetetus.*']),
    description='Exact decisions on the rationality and commensurability of square roots, with proof traces.',
    long_description=open('README.md', 'r', encoding='utf-8').read(),
    long_description_content_type='text/markdown',
    install_requires=requirements,
    include_package_data=True,
    entry_points={
        'console_scripts': [
            'theaetetus=theaetetus.powers.cli:main',
        ],
    },
    python_requires='>=3.8'
)
