from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # Pure-Python fallback kernel is used when the extension is absent.
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("primover._cosetscan", ["src/primover/_cosetscan.pyx"])],
        language_level=3,
    )

setup(ext_modules=ext_modules)
