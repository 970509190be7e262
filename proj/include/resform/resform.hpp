#pragma once

#include "resform/charsums.hpp"
#include "resform/chartransform.hpp"
#include "resform/diffsets.hpp"
#include "resform/field.hpp"
#include "resform/funcspace.hpp"
#include "resform/rational.hpp"
#include "resform/search.hpp"
#include "resform/sumsets.hpp"
