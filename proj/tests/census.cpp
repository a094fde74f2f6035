// census helper
