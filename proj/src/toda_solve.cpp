#include "tworing/toda.hpp"
