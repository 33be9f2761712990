// placeholder, replaced when the library surface lands
