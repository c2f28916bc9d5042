#include "tworing/io.hpp"
