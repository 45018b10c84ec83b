#include "gts/geometry.hpp"
