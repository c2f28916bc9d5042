#include "tworing/verify.hpp"
