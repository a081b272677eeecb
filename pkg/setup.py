import sys

import setuptools as st
sys.path.insert(0, '.')

install_requires = ['configobj', 'path-helpers', 'progressbar2', 'pyyaml',
                    'si-prefix>=0.4.post3', 'sympy>=1.9']

st.setup(name='semilinear-reps',
         version='0.1.0',
         description='Exact classification of semilinear representations '
         'of finite groups over Galois extensions.',
         keywords='semilinear representation schur index galois descent',
         license='BSD',
         packages=['slr', 'slr.bin', 'slr.tests'],
         install_requires=install_requires,
         extras_require={'test': ['pytest']},
         # Install data listed in `MANIFEST.in`
         include_package_data=True,
         entry_points={'console_scripts': ['slr = slr.bin:main']})
