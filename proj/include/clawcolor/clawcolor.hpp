#ifndef CLAWCOLOR_CLAWCOLOR_HPP
#define CLAWCOLOR_CLAWCOLOR_HPP

#include "clawcolor/bridge_colorer.hpp"
#include "clawcolor/canonical.hpp"
#include "clawcolor/coloring.hpp"
#include "clawcolor/error.hpp"
#include "clawcolor/factorization.hpp"
#include "clawcolor/fixtures.hpp"
#include "clawcolor/generators.hpp"
#include "clawcolor/graph.hpp"
#include "clawcolor/io.hpp"
#include "clawcolor/isomorphism.hpp"
#include "clawcolor/oracle.hpp"
#include "clawcolor/oum.hpp"
#include "clawcolor/recognition.hpp"

#endif
