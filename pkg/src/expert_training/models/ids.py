ClassId = str
SuperclassId = str
