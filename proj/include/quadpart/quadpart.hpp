#pragma once

#include "enumerate.hpp"
#include "field.hpp"
#include "ideal.hpp"
#include "integer.hpp"
#include "partition.hpp"
#include "qsum.hpp"
#include "verify.hpp"
