from DiophTools.ChosenNum.arithmetic.rational import *
from DiophTools.ChosenNum.arithmetic.arcs import *
from DiophTools.ChosenNum.arithmetic.coverage import CoverageState
