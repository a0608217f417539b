GCOVER_VERSION = '1.0.0'  # version of the package
FORMAT_VERSION = 1        # version of group files, reports and replay payloads
