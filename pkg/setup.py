from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # no Cython: the package falls back to the pure-Python kernel
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("trisum._kernel", ["src/trisum/_kernel.pyx"], extra_compile_args=["-O3"], optional=True)],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
