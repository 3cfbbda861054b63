# Parameter validation and report rendering shared by the CLI and the pages
