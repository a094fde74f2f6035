// C API implementation comes later
