# Command line front end: instance files, reports, figures and subcommands
