from setuptools import setup

install_requires = [
    'networkx>=2.5',
    'numpy>=1.19',
    'pandas>=1.1.4',
    'simplejson>=3.16.0',
    'toml>=0.10.1',
]

extra_require = {
    'test': ['pytest', 'hypothesis'],
    'doc': ['sphinx', 'sphinx_rtd_theme'],
}

def set_entry_points():
    r = {}
    r['console_scripts'] = [
        'ppcov=ppcov.apps.cli:run',
    ]
    return r

setup(
    name='ppcov',
    version='0.1.0',
    description='Prime path coverage for control flow graphs',
    author='ppcov developers',
    packages=[
        'ppcov.apps',
        'ppcov.apps.cli',
        'ppcov.contrib',
        'ppcov.coverage',
        'ppcov.data',
        'ppcov.graph',
        'ppcov.instrument',
        'ppcov.paths',
        'ppcov.report',
        'ppcov'],
    package_dir={
        'ppcov.apps': 'main/apps',
        'ppcov.apps.cli': 'main/apps/cli',
        'ppcov.contrib': 'main/contrib',
        'ppcov.coverage': 'main/coverage',
        'ppcov.data': 'main/data',
        'ppcov.graph': 'main/graph',
        'ppcov.instrument': 'main/instrument',
        'ppcov.paths': 'main/paths',
        'ppcov.report': 'main/report',
        'ppcov': 'main'
    },
    package_data={
        'ppcov.data': ['*.toml'],
        'ppcov.contrib': ['fixtures/*.cfg'],
    },
    include_package_data=True,
    install_requires=install_requires,
    extras_require=extra_require,
    entry_points=set_entry_points(),
    python_requires='>=3.8',
    classifiers=[
        'Programming Language :: Python :: 3',
        'Topic :: Software Development :: Libraries :: Python Modules',
        'Topic :: Software Development :: Testing'],
)
