#pragma once

#include "qframes/catalog.hpp"
#include "qframes/embed.hpp"
#include "qframes/equiv.hpp"
#include "qframes/error.hpp"
#include "qframes/frames.hpp"
#include "qframes/groupframes.hpp"
#include "qframes/io.hpp"
#include "qframes/lines.hpp"
#include "qframes/qmatrix.hpp"
#include "qframes/quaternion.hpp"
