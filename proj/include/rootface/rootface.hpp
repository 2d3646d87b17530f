#ifndef ROOTFACE_ROOTFACE_HPP
#define ROOTFACE_ROOTFACE_HPP

#include "rootface/certificate.hpp"
#include "rootface/enumeration.hpp"
#include "rootface/error.hpp"
#include "rootface/face_oracle.hpp"
#include "rootface/graph.hpp"
#include "rootface/hull_oracle.hpp"
#include "rootface/parallel.hpp"
#include "rootface/query.hpp"
#include "rootface/random_dag.hpp"
#include "rootface/rational.hpp"
#include "rootface/shortest_paths.hpp"
#include "rootface/simplex.hpp"
#include "rootface/verify.hpp"

#endif  // ROOTFACE_ROOTFACE_HPP
