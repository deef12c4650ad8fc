from DiophTools.ChosenNum.sievelab.level_sets import *
from DiophTools.ChosenNum.sievelab.expectation import *
