// filled in after the core modules
