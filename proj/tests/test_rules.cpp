#include "doctest.h"
// placeholder, replaced as the module lands
